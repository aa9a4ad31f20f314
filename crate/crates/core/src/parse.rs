//! Text and JSON forms of algebra elements.
//!
//! Text: a signed sum of terms `c*B[a,b,...]` where `c` is an integer or
//! `p/q` (optional, default 1) and `B` is one of `M`, `F`, `η`/`eta` (QSym),
//! `H` (NSym), or `m`, `p`, `e`, `h` (Sym). A bare coefficient is a multiple
//! of the unit. Whitespace is ignored.
//!
//! JSON: `{"basis": "M", "terms": [{"index": [1, 2], "coeff": "1/2"}]}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::compositions::{Composition, Partition};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::evenodd::eta_basis;
use crate::nsym::NSym;
use crate::qsym::{QSym, QSymBasis};
use crate::scalar::Field;
use crate::sym::{Sym, SymBasis};

/// A parsed element of QSym, NSym, or Sym.
#[derive(Clone, PartialEq, Debug)]
pub enum AnyElement<S> {
    QSym(QSym<S>),
    NSym(NSym<S>),
    Sym(Sym<S>),
}

impl<S: Field> AnyElement<S> {
    pub fn algebra_name(&self) -> &'static str {
        match self {
            AnyElement::QSym(_) => "qsym",
            AnyElement::NSym(_) => "nsym",
            AnyElement::Sym(_) => "sym",
        }
    }

    pub fn into_qsym(self) -> Result<QSym<S>> {
        match self {
            AnyElement::QSym(x) => Ok(x),
            AnyElement::Sym(x) => Ok(x.to_qsym()),
            AnyElement::NSym(_) => Err(Error::BasisMismatch("expected a QSym element, found NSym".into())),
        }
    }

    pub fn to_json(&self) -> String {
        fn terms<I: crate::element::Basis, S: Field>(e: &Element<I, S>, index: impl Fn(&I) -> Vec<usize>) -> Vec<JsonTerm> {
            e.iter().map(|(i, c)| JsonTerm { index: index(i), coeff: c.to_string() }).collect()
        }
        let doc = match self {
            AnyElement::QSym(x) => JsonElement {
                basis: x.basis().letter().into(),
                terms: terms(x.terms(), |a: &Composition| a.parts().to_vec()),
            },
            AnyElement::NSym(x) => JsonElement {
                basis: "H".into(),
                terms: terms(x.terms(), |a: &Composition| a.parts().to_vec()),
            },
            AnyElement::Sym(x) => JsonElement {
                basis: x.basis().letter().into(),
                terms: terms(x.terms(), |l: &Partition| l.parts().to_vec()),
            },
        };
        serde_json::to_string(&doc).expect("serializable")
    }
}

impl<S: Field> fmt::Display for AnyElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyElement::QSym(x) => x.fmt(f),
            AnyElement::NSym(x) => x.fmt(f),
            AnyElement::Sym(x) => x.fmt(f),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    index: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct JsonElement {
    basis: String,
    terms: Vec<JsonTerm>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Letter {
    Q(QSymBasis),
    Eta,
    N,
    S(SymBasis),
}

impl Letter {
    fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "M" => Letter::Q(QSymBasis::Monomial),
            "F" => Letter::Q(QSymBasis::Fundamental),
            "η" | "eta" => Letter::Eta,
            "H" => Letter::N,
            "m" => Letter::S(SymBasis::Monomial),
            "p" => Letter::S(SymBasis::Power),
            "e" => Letter::S(SymBasis::Elementary),
            "h" => Letter::S(SymBasis::Complete),
            _ => return None,
        })
    }

    fn family(self) -> u8 {
        match self {
            Letter::Q(_) | Letter::Eta => 0,
            Letter::N => 1,
            Letter::S(_) => 2,
        }
    }
}

struct Term<S> {
    coeff: S,
    letter: Option<Letter>,
    index: Vec<usize>,
    position: usize,
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    at: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        let chars = text.chars().enumerate().filter(|(_, c)| !c.is_whitespace()).collect();
        Parser { chars, at: 0, text }
    }

    fn position(&self) -> usize {
        self.chars.get(self.at).map_or(self.text.chars().count(), |&(p, _)| p)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.position(), message: message.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(|&c| f(c)) {
            s.push(c);
            self.at += 1;
        }
        s
    }

    fn number<S: Field>(&mut self) -> Result<Option<S>> {
        let start = self.position();
        let text = self.take_while(|c| c.is_ascii_digit() || c == '.' || c == '/');
        if text.is_empty() {
            return Ok(None);
        }
        match S::parse_ratio(&text) {
            Some(v) => Ok(Some(v)),
            None => Err(Error::Parse { position: start, message: format!("invalid coefficient `{text}`") }),
        }
    }

    fn index(&mut self) -> Result<Vec<usize>> {
        if !self.eat('[') {
            return self.error("expected `[`");
        }
        let mut parts = Vec::new();
        if self.eat(']') {
            return Ok(parts);
        }
        loop {
            let start = self.position();
            let digits = self.take_while(|c| c.is_ascii_digit());
            match digits.parse::<usize>() {
                Ok(0) => return Err(Error::Parse { position: start, message: "parts must be positive".into() }),
                Ok(v) => parts.push(v),
                Err(_) => return Err(Error::Parse { position: start, message: "expected a positive integer".into() }),
            }
            if self.eat(']') {
                return Ok(parts);
            }
            if !self.eat(',') {
                return self.error("expected `,` or `]`");
            }
        }
    }

    fn term<S: Field>(&mut self, sign: S) -> Result<Term<S>> {
        let position = self.position();
        let coeff = self.number::<S>()?;
        if coeff.is_some() && !self.eat('*') {
            let at_letter = self.peek().is_some_and(|c| c.is_alphabetic());
            if !at_letter {
                return Ok(Term { coeff: sign * coeff.unwrap(), letter: None, index: Vec::new(), position });
            }
        }
        let name_start = self.position();
        let name = self.take_while(|c| c.is_alphabetic());
        if name.is_empty() {
            return self.error("expected a basis letter");
        }
        let Some(letter) = Letter::from_name(&name) else {
            return Err(Error::Parse { position: name_start, message: format!("unknown basis `{name}`") });
        };
        let index = self.index()?;
        Ok(Term { coeff: sign * coeff.unwrap_or_else(S::one), letter: Some(letter), index, position })
    }

    fn terms<S: Field>(&mut self) -> Result<Vec<Term<S>>> {
        let mut out = Vec::new();
        if self.peek().is_none() {
            return self.error("empty expression");
        }
        let mut sign = if self.eat('-') {
            -S::one()
        } else {
            self.eat('+');
            S::one()
        };
        loop {
            out.push(self.term(sign)?);
            match self.peek() {
                None => return Ok(out),
                Some('+') => sign = S::one(),
                Some('-') => sign = -S::one(),
                Some(c) => return self.error(format!("unexpected `{c}`")),
            }
            self.at += 1;
        }
    }
}

fn composition_at(parts: Vec<usize>) -> Composition {
    Composition::new(parts)
}

/// Parse the text form. Terms from different algebras are rejected; mixed
/// bases within one algebra are summed in the monomial basis.
pub fn parse_element<S: Field>(text: &str) -> Result<AnyElement<S>> {
    let mut parser = Parser::new(text);
    let terms = parser.terms::<S>()?;
    if terms.len() == 1 && terms[0].letter.is_none() && terms[0].coeff.is_zero() {
        return Ok(AnyElement::QSym(QSym::zero()));
    }
    let family = terms.iter().find_map(|t| t.letter.map(Letter::family)).unwrap_or(0);
    if let Some(t) = terms.iter().find(|t| t.letter.is_some_and(|l| l.family() != family)) {
        return Err(Error::Parse { position: t.position, message: "terms from different algebras".into() });
    }
    Ok(match family {
        0 => {
            let mut acc: Option<QSym<S>> = None;
            for t in terms {
                let x = match t.letter {
                    None => QSym::one().scale(&t.coeff),
                    Some(Letter::Q(b)) => QSym::new(b, Element::term(composition_at(t.index), t.coeff)),
                    Some(Letter::Eta) => {
                        let beta = composition_at(t.index);
                        eta_basis::<S>(&beta)
                            .map_err(|_| Error::Parse { position: t.position, message: format!("η{beta} needs odd parts") })?
                            .scale(&t.coeff)
                    }
                    _ => unreachable!(),
                };
                acc = Some(match acc {
                    None => x,
                    Some(a) if a.basis() == x.basis() => &a + &x,
                    Some(a) => &a.to_m() + &x.to_m(),
                });
            }
            AnyElement::QSym(acc.unwrap_or_else(QSym::zero))
        }
        1 => {
            let mut acc = NSym::zero();
            for t in terms {
                acc = &acc + &NSym::new(Element::term(composition_at(t.index), t.coeff));
            }
            AnyElement::NSym(acc)
        }
        _ => {
            let mut acc: Option<Sym<S>> = None;
            for t in terms {
                let basis = match t.letter {
                    Some(Letter::S(b)) => b,
                    _ => SymBasis::Monomial,
                };
                let x = Sym::new(basis, Element::term(Partition::new(t.index), t.coeff));
                acc = Some(match acc {
                    None => x,
                    Some(a) => &a + &x,
                });
            }
            AnyElement::Sym(acc.unwrap_or_else(Sym::zero))
        }
    })
}

/// Parse a QSym element; Sym input is embedded.
pub fn parse_qsym<S: Field>(text: &str) -> Result<QSym<S>> {
    parse_element(text)?.into_qsym()
}

/// Parse the JSON form.
pub fn element_from_json<S: Field>(text: &str) -> Result<AnyElement<S>> {
    let doc: JsonElement = serde_json::from_str(text)
        .map_err(|e| Error::Parse { position: e.column(), message: e.to_string() })?;
    let Some(letter) = Letter::from_name(&doc.basis) else {
        return Err(Error::UnknownName(doc.basis));
    };
    let mut rendered = Vec::new();
    for t in &doc.terms {
        if S::parse_ratio(&t.coeff).is_none() {
            return Err(Error::Parse { position: 0, message: format!("invalid coefficient `{}`", t.coeff) });
        }
        let idx: Vec<String> = t.index.iter().map(usize::to_string).collect();
        rendered.push(format!("{}*{}[{}]", t.coeff, doc.basis, idx.join(",")));
    }
    if rendered.is_empty() {
        return Ok(match letter {
            Letter::N => AnyElement::NSym(NSym::zero()),
            Letter::S(b) => AnyElement::Sym(Sym::new(b, Element::zero())),
            Letter::Q(b) => AnyElement::QSym(QSym::new(b, Element::zero())),
            Letter::Eta => AnyElement::QSym(QSym::zero()),
        });
    }
    // Coefficients may be negative, so join with `+` and let signs parse.
    parse_element(&rendered.join("+").replace("+-", "-"))
}
