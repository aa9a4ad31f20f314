//! Command-line front end for the `combhopf` library.
//!
//! Exit codes: 0 on success or a passing check, 1 when a check fails,
//! 2 on invalid input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use combhopf::characters::{eval_qsym, qsym_component, zeta_qsym_on, zeta_sym, NamedCharacter};
use combhopf::compositions::partitions_of;
use combhopf::evenodd::{ds_check_form, DsForm, HilbertSeries};
use combhopf::hopf::{AlgebraName, Cop, QSymAlgebra, SymAlgebra};
use combhopf::instances::{
    graph_zeta, poset_zeta, rota_zeta, FinitePoset, GradedPoset, GradedPosetClass, GraphAlgebra, GraphClass,
    PosetAlgebra, PosetClass, RotaAlgebra, SimpleGraph,
};
use combhopf::parse::{parse_element, parse_qsym, AnyElement};
use combhopf::qsym::render_pairs;
use combhopf::universal::{psi_on_qsym, theta, CanonicalProjections, UniversalMorphism};
use combhopf::{Character, Element, Error, NSym, QSym, Rational, Sym, SymBasis};

const DEFAULT_DEGREE: usize = 8;

#[derive(Parser)]
#[command(name = "combhopf", version, about = "Exact computations in combinatorial Hopf algebras")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Arithmetic on quasi-symmetric functions.
    Qsym {
        op: QsymOp,
        #[arg(required = true, allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Character operations. Characters without `--element` print as
    /// elements of the graded dual up to `--degree`.
    Char {
        op: CharOp,
        #[arg(long = "char", required = true)]
        chars: Vec<String>,
        #[arg(long, allow_negative_numbers = true)]
        m: Option<i64>,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
        #[arg(long, allow_hyphen_values = true)]
        element: Option<String>,
    },
    /// The universal morphism into QSym.
    Psi {
        #[arg(long)]
        algebra: String,
        #[arg(long, conflicts_with = "element", required_unless_present = "element")]
        input: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        element: Option<String>,
        #[arg(long = "char")]
        character: Option<String>,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
    },
    /// Stembridge's map onto the peak subalgebra.
    Theta {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Canonical projections onto the even and odd subalgebras.
    Proj {
        side: Side,
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
    },
    /// Generalized Dehn–Sommerville relations.
    DsCheck {
        #[arg(long, conflicts_with = "poset", required_unless_present = "poset", allow_hyphen_values = true)]
        element: Option<String>,
        #[arg(long)]
        poset: Option<PathBuf>,
        #[arg(long, default_value = "E")]
        form: String,
    },
    /// Check whether a bounded graded poset is eulerian.
    Eulerian {
        #[arg(long)]
        poset: PathBuf,
    },
    /// Chromatic symmetric function of a graph.
    Chromatic {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        nvars: Option<usize>,
    },
    /// Hilbert series coefficients.
    Hilbert {
        #[arg(long)]
        series: String,
        #[arg(long)]
        degree: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum QsymOp {
    Mul,
    Coprod,
    Antipode,
    Tofm,
    Tomf,
}

#[derive(Clone, Copy, ValueEnum)]
enum CharOp {
    Eval,
    Inv,
    Conv,
    Pow,
    Decompose,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Plus,
    Minus,
}

enum Failure {
    Invalid(String),
    Check(Output),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Invalid(msg.into()))
}

struct Output {
    text: String,
    json: Value,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Output { text: text.into(), json }
    }

    fn print(&self, as_json: bool) {
        if as_json {
            println!("{}", self.json);
        } else {
            println!("{}", self.text);
        }
    }
}

type Q = QSym<Rational>;

fn element_json(x: AnyElement<Rational>) -> Value {
    serde_json::from_str(&x.to_json()).expect("element JSON")
}

fn qsym_json(x: &Q) -> Value {
    element_json(AnyElement::QSym(x.clone()))
}

fn element_output(x: AnyElement<Rational>) -> Output {
    Output::new(x.to_string(), element_json(x))
}

fn check_degree(degree: usize, bound: usize) -> Result<(), Failure> {
    if degree > bound {
        return Err(Error::DegreeBound { degree, bound }.into());
    }
    Ok(())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).or_else(|e| invalid(format!("cannot read {}: {e}", path.display())))
}

fn load_poset(path: &Path) -> Result<FinitePoset, Failure> {
    Ok(FinitePoset::from_json(&read(path)?)?)
}

fn load_graded(path: &Path) -> Result<GradedPoset, Failure> {
    Ok(GradedPoset::new(load_poset(path)?)?)
}

fn qsym_cmd(op: QsymOp, exprs: &[String]) -> Result<Output, Failure> {
    let xs: Vec<Q> = exprs.iter().map(|e| parse_qsym(e)).collect::<Result<_, _>>()?;
    let single = || match xs.as_slice() {
        [x] => Ok(x),
        _ => invalid("this operation takes exactly one expression"),
    };
    let result = match op {
        QsymOp::Mul => {
            if xs.len() < 2 {
                return invalid("mul needs at least two expressions");
            }
            xs[1..].iter().fold(xs[0].clone(), |acc, x| acc.product(x))
        }
        QsymOp::Coprod => {
            let x = single()?;
            let d = x.coproduct();
            let letter = x.basis().letter();
            let terms: Vec<Value> = d
                .iter()
                .map(|((a, b), c)| json!({"left": a.parts(), "right": b.parts(), "coeff": c.to_string()}))
                .collect();
            return Ok(Output::new(render_pairs(&d, letter), json!({"basis": letter, "terms": terms})));
        }
        QsymOp::Antipode => single()?.antipode(),
        QsymOp::Tofm => single()?.to_m(),
        QsymOp::Tomf => single()?.to_f(),
    };
    Ok(element_output(AnyElement::QSym(result)))
}

/// A named character on QSym or Sym.
#[derive(Clone)]
enum Named {
    Q(Character<QSymAlgebra, Rational>),
    S(Character<SymAlgebra, Rational>),
}

fn named_character(name: &str) -> Result<Named, Failure> {
    let which: NamedCharacter = name.parse()?;
    if let Some(c) = which.qsym() {
        return Ok(Named::Q(c));
    }
    match which {
        NamedCharacter::ZetaS => Ok(Named::S(zeta_sym())),
        _ => invalid(format!("character `{name}` acts on an instance algebra; use `psi --algebra ... --char {name}`")),
    }
}

impl Named {
    fn same_side(&self, other: &Named) -> bool {
        matches!((self, other), (Named::Q(_), Named::Q(_)) | (Named::S(_), Named::S(_)))
    }

    fn convolve(&self, other: &Named) -> Named {
        match (self, other) {
            (Named::Q(a), Named::Q(b)) => Named::Q(a.convolve(b)),
            (Named::S(a), Named::S(b)) => Named::S(a.convolve(b)),
            _ => unreachable!("checked by same_side"),
        }
    }

    fn inverse(&self) -> Named {
        match self {
            Named::Q(a) => Named::Q(a.inverse()),
            Named::S(a) => Named::S(a.inverse()),
        }
    }

    fn power(&self, m: i64) -> Named {
        match self {
            Named::Q(a) => Named::Q(a.power(m)),
            Named::S(a) => Named::S(a.power(m)),
        }
    }

    fn decompose(&self, degree: usize) -> Result<(Named, Named), Failure> {
        Ok(match self {
            Named::Q(a) => {
                let (p, m) = a.even_odd_decompose(degree)?;
                (Named::Q(p), Named::Q(m))
            }
            Named::S(a) => {
                let (p, m) = a.even_odd_decompose(degree)?;
                (Named::S(p), Named::S(m))
            }
        })
    }

    fn eval(&self, text: &str, bound: usize) -> Result<Output, Failure> {
        let value = match self {
            Named::Q(c) => {
                let x = parse_qsym::<Rational>(text)?;
                check_degree(x.max_degree(), bound)?;
                eval_qsym(c.functional(), &x)
            }
            Named::S(c) => {
                let x = match parse_element::<Rational>(text)? {
                    AnyElement::Sym(s) => s,
                    AnyElement::QSym(q) => Sym::from_qsym(&q)?,
                    AnyElement::NSym(_) => return invalid("expected a symmetric function"),
                };
                let m = x.m_terms();
                check_degree(m.indices().map(|l| l.weight()).max().unwrap_or(0), bound)?;
                c.eval_element(&m)
            }
        };
        Ok(Output::new(value.to_string(), json!({"value": value.to_string()})))
    }

    /// The restriction to degrees `≤ n` as an element of the dual:
    /// `Σ φ(M_α) H_α` on QSym, `Σ φ(m_λ) h_λ` on Sym.
    fn dual(&self, n: usize) -> AnyElement<Rational> {
        match self {
            Named::Q(c) => {
                let mut acc = NSym::zero();
                for d in 0..=n {
                    acc = &acc + &qsym_component(c.functional(), d);
                }
                AnyElement::NSym(acc)
            }
            Named::S(c) => {
                let mut terms = Element::zero();
                for d in 0..=n {
                    for lambda in partitions_of(d) {
                        let v = c.eval(&lambda);
                        terms.add_term(lambda, v);
                    }
                }
                AnyElement::Sym(Sym::new(SymBasis::Complete, terms))
            }
        }
    }

    fn report(&self, element: Option<&str>, degree: usize) -> Result<Output, Failure> {
        match element {
            Some(text) => self.eval(text, degree),
            None => Ok(element_output(self.dual(degree))),
        }
    }
}

fn char_cmd(op: CharOp, names: &[String], m: Option<i64>, degree: usize, element: Option<&str>) -> Result<Output, Failure> {
    let chars: Vec<Named> = names.iter().map(|n| named_character(n)).collect::<Result<_, _>>()?;
    let first = chars[0].clone();
    if !matches!(op, CharOp::Conv) && chars.len() > 1 {
        return invalid("only `conv` takes more than one --char");
    }
    match op {
        CharOp::Eval => match element {
            Some(text) => first.eval(text, degree),
            None => invalid("`char eval` needs --element"),
        },
        CharOp::Inv => first.inverse().report(element, degree),
        CharOp::Pow => match m {
            Some(m) => first.power(m).report(element, degree),
            None => invalid("`char pow` needs --m"),
        },
        CharOp::Conv => {
            if chars.len() < 2 {
                return invalid("`char conv` needs at least two --char options");
            }
            if !chars.iter().all(|c| c.same_side(&first)) {
                return invalid("characters live on different algebras");
            }
            chars[1..].iter().fold(first, |acc, c| acc.convolve(c)).report(element, degree)
        }
        CharOp::Decompose => {
            let (plus, minus) = first.decompose(degree)?;
            let (p, q) = (plus.report(element, degree)?, minus.report(element, degree)?);
            Ok(Output::new(
                format!("plus: {}\nminus: {}", p.text, q.text),
                json!({"plus": p.json, "minus": q.json}),
            ))
        }
    }
}

fn psi_cmd(
    algebra: &str,
    input: Option<&Path>,
    element: Option<&str>,
    character: Option<&str>,
    degree: usize,
) -> Result<Output, Failure> {
    let algebra: AlgebraName = algebra.parse()?;
    let needs_element = matches!(algebra, AlgebraName::QSym | AlgebraName::QSymCop | AlgebraName::Sym);
    if needs_element && element.is_none() {
        return invalid("this algebra takes --element");
    }
    if !needs_element && input.is_none() {
        return invalid("this algebra takes --input FILE");
    }
    let expect = |allowed: &[&str], default: &str| -> Result<String, Failure> {
        let name = character.unwrap_or(default);
        name.parse::<NamedCharacter>()?;
        if allowed.contains(&name) {
            Ok(name.to_string())
        } else {
            invalid(format!("character `{name}` does not act on this algebra (expected one of {})", allowed.join(", ")))
        }
    };
    let image = match algebra {
        AlgebraName::QSym => {
            let name = expect(&["zetaQ", "zetaQ_inv", "nuQ", "chiQ"], "zetaQ")?;
            let x = parse_qsym::<Rational>(element.unwrap())?;
            check_degree(x.max_degree(), degree)?;
            let Named::Q(c) = named_character(&name)? else { unreachable!() };
            psi_on_qsym(&c, &x)
        }
        AlgebraName::QSymCop => {
            let name = expect(&["zetaQ", "zetaQ_inv"], "zetaQ")?;
            let x = parse_qsym::<Rational>(element.unwrap())?;
            check_degree(x.max_degree(), degree)?;
            let z = zeta_qsym_on::<_, Rational>(Arc::new(Cop(QSymAlgebra)));
            let c = if name == "zetaQ" { z } else { z.inverse() };
            UniversalMorphism::new(c).apply(&x.m_terms())
        }
        AlgebraName::Sym => {
            expect(&["zetaS"], "zetaS")?;
            let x = match parse_element::<Rational>(element.unwrap())? {
                AnyElement::Sym(s) => s,
                AnyElement::QSym(q) => Sym::from_qsym(&q)?,
                AnyElement::NSym(_) => return invalid("expected a symmetric function"),
            };
            let m = x.m_terms();
            check_degree(m.indices().map(|l| l.weight()).max().unwrap_or(0), degree)?;
            UniversalMorphism::new(zeta_sym()).apply(&m)
        }
        AlgebraName::Rota => {
            expect(&["rota_zeta"], "rota_zeta")?;
            let p = load_graded(input.unwrap())?;
            check_degree(p.rank(), degree)?;
            let z = rota_zeta::<Rational>(Arc::new(RotaAlgebra::new()));
            UniversalMorphism::new(z).apply(&Element::basis(GradedPosetClass::of(&p)))
        }
        AlgebraName::Posets => {
            expect(&["poset_zeta"], "poset_zeta")?;
            let p = load_poset(input.unwrap())?;
            check_degree(p.size(), degree)?;
            let z = poset_zeta::<Rational>(Arc::new(PosetAlgebra::new()));
            UniversalMorphism::new(z).apply(&Element::basis(PosetClass::of(&p)))
        }
        AlgebraName::Graphs => {
            expect(&["graph_zeta"], "graph_zeta")?;
            let g = SimpleGraph::from_json(&read(input.unwrap())?)?;
            check_degree(g.order(), degree)?;
            let z = graph_zeta::<Rational>(Arc::new(GraphAlgebra::new()));
            UniversalMorphism::new(z).apply(&Element::basis(GraphClass::of(&g)))
        }
    };
    Ok(element_output(AnyElement::QSym(image)))
}

fn ds_check_cmd(element: Option<&str>, poset: Option<&Path>, form: &str) -> Result<Output, Failure> {
    let form: DsForm = form.parse()?;
    let x = match (element, poset) {
        (Some(text), _) => parse_qsym::<Rational>(text)?,
        (None, Some(path)) => {
            let p = load_graded(path)?;
            let z = rota_zeta::<Rational>(Arc::new(RotaAlgebra::new()));
            UniversalMorphism::new(z).apply(&Element::basis(GradedPosetClass::of(&p)))
        }
        (None, None) => return invalid("give --element or --poset"),
    };
    let report = ds_check_form(&x, form)?;
    let json: Value = serde_json::from_str(&report.to_json()).expect("report JSON");
    let out = Output::new(report.to_string().trim_end().to_string(), json);
    if report.passed() {
        Ok(out)
    } else {
        Err(Failure::Check(out))
    }
}

fn eulerian_cmd(path: &Path) -> Result<Output, Failure> {
    let p = load_graded(path)?;
    let labels = p.poset().labels();
    let n = p.poset().size();
    let mut witness = None;
    'search: for x in 0..n {
        for y in 0..n {
            if let Some(mu) = p.mobius_interval(x, y) {
                let expected = if (p.rank_of(y) - p.rank_of(x)) % 2 == 0 { 1 } else { -1 };
                if mu != expected {
                    witness = Some((x, y, mu, expected));
                    break 'search;
                }
            }
        }
    }
    let mut doc = json!({"eulerian": witness.is_none(), "rank": p.rank(), "mobius": p.mobius()});
    match witness {
        None => Ok(Output::new(format!("eulerian (rank {}, mobius {})", p.rank(), p.mobius()), doc)),
        Some((x, y, mu, expected)) => {
            doc["witness"] = json!({"lower": labels[x], "upper": labels[y], "mobius": mu, "expected": expected});
            Err(Failure::Check(Output::new(
                format!("not eulerian: interval [{}, {}] has mobius {mu}, expected {expected}", labels[x], labels[y]),
                doc,
            )))
        }
    }
}

fn chromatic_cmd(path: &Path, nvars: Option<usize>) -> Result<Output, Failure> {
    let g = SimpleGraph::from_json(&read(path)?)?;
    let z = graph_zeta::<Rational>(Arc::new(GraphAlgebra::new()));
    let image = UniversalMorphism::new(z).apply(&Element::basis(GraphClass::of(&g)));
    let sym = Sym::from_qsym(&image)?;
    let mut text = format!("{image}\n{sym}");
    let mut doc = json!({"qsym": qsym_json(&image), "sym": element_json(AnyElement::Sym(sym))});
    if let Some(k) = nvars {
        if k > 16 {
            return Err(Error::DegreeBound { degree: k, bound: 16 }.into());
        }
        let poly = image.expand_truncated(k);
        text.push_str(&format!("\n{poly}"));
        doc["polynomial"] = json!(poly.to_string());
    }
    Ok(Output::new(text, doc))
}

fn hilbert_cmd(series: &str, degree: usize) -> Result<Output, Failure> {
    let which: HilbertSeries = series.parse()?;
    check_degree(degree, 64)?;
    let s = which.expand::<Rational>(degree)?;
    let coeffs: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
    Ok(Output::new(s.to_string(), json!({"series": series, "coefficients": coeffs})))
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Qsym { op, exprs } => qsym_cmd(*op, exprs),
        Command::Char { op, chars, m, degree, element } => char_cmd(*op, chars, *m, *degree, element.as_deref()),
        Command::Psi { algebra, input, element, character, degree } => {
            psi_cmd(algebra, input.as_deref(), element.as_deref(), character.as_deref(), *degree)
        }
        Command::Theta { expr } => Ok(element_output(AnyElement::QSym(theta(&parse_qsym(expr)?)))),
        Command::Proj { side, expr, degree } => {
            let x = parse_qsym::<Rational>(expr)?;
            check_degree(x.max_degree(), *degree)?;
            let proj = CanonicalProjections::new(*degree)?;
            let y = match side {
                Side::Plus => proj.psi_plus(&x)?,
                Side::Minus => proj.psi_minus(&x)?,
            };
            Ok(element_output(AnyElement::QSym(y)))
        }
        Command::DsCheck { element, poset, form } => ds_check_cmd(element.as_deref(), poset.as_deref(), form),
        Command::Eulerian { poset } => eulerian_cmd(poset),
        Command::Chromatic { graph, nvars } => chromatic_cmd(graph, *nvars),
        Command::Hilbert { series, degree } => hilbert_cmd(series, *degree),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            out.print(cli.json);
            ExitCode::SUCCESS
        }
        Err(Failure::Check(out)) => {
            out.print(cli.json);
            ExitCode::from(1)
        }
        Err(Failure::Invalid(msg)) => {
            if cli.json {
                println!("{}", json!({"error": msg}));
            } else {
                eprintln!("error: {msg}");
            }
            ExitCode::from(2)
        }
    }
}
