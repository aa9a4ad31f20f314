//! Canonical forms of small relations (graphs, strict orders) up to
//! relabeling: iterated degree refinement plus individualization, keeping
//! the smallest adjacency encoding over all leaves of the search tree.

/// Adjacency rows as bitmasks; `rows[i] >> j & 1` means `i → j`.
pub type Rows = Vec<u64>;

/// Relabel `rows` so that vertex `v` becomes `perm[v]`.
pub fn permute(rows: &[u64], perm: &[usize]) -> Rows {
    let n = rows.len();
    let mut out = vec![0u64; n];
    for i in 0..n {
        for j in 0..n {
            if rows[i] >> j & 1 == 1 {
                out[perm[i]] |= 1 << perm[j];
            }
        }
    }
    out
}

/// Split cells by how many out- and in-neighbours each vertex has in every
/// cell, until the ordered partition is stable.
fn refine(rows: &[u64], cols: &[u64], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let key = masks
                        .iter()
                        .flat_map(|m| [(rows[v] & m).count_ones(), (cols[v] & m).count_ones()])
                        .collect();
                    (key, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(rows: &[u64], cols: &[u64], cells: Vec<Vec<usize>>, best: &mut Option<(Rows, Vec<usize>)>) {
    let cells = refine(rows, cols, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let mut perm = vec![0; rows.len()];
        for (pos, cell) in cells.iter().enumerate() {
            perm[cell[0]] = pos;
        }
        let code = permute(rows, &perm);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, perm));
        }
        return;
    };
    for &v in &cells[target] {
        let mut split = cells[..target].to_vec();
        split.push(vec![v]);
        split.push(cells[target].iter().copied().filter(|&w| w != v).collect());
        split.extend_from_slice(&cells[target + 1..]);
        search(rows, cols, split, best);
    }
}

/// The canonical adjacency rows and the relabeling that produces them.
pub fn canonical_form(rows: &[u64]) -> (Rows, Vec<usize>) {
    let n = rows.len();
    assert!(n <= 64, "canonical form supports at most 64 vertices");
    if n == 0 {
        return (Vec::new(), Vec::new());
    }
    let mut cols = vec![0u64; n];
    for i in 0..n {
        for j in 0..n {
            if rows[i] >> j & 1 == 1 {
                cols[j] |= 1 << i;
            }
        }
    }
    let mut best = None;
    search(rows, &cols, vec![(0..n).collect()], &mut best);
    best.expect("search visits at least one leaf")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(order: &[usize]) -> Rows {
        let n = order.len();
        let mut rows = vec![0u64; n];
        for w in order.windows(2) {
            rows[w[0]] |= 1 << w[1];
            rows[w[1]] |= 1 << w[0];
        }
        rows
    }

    #[test]
    fn relabeled_paths_agree() {
        let a = canonical_form(&path(&[0, 1, 2, 3])).0;
        let b = canonical_form(&path(&[2, 0, 3, 1])).0;
        assert_eq!(a, b);
        let star = vec![0b1110, 0b0001, 0b0001, 0b0001];
        assert_ne!(canonical_form(&star).0, a);
    }

    #[test]
    fn direction_matters() {
        let up = vec![0b10, 0b00];
        let down = vec![0b00, 0b01];
        assert_eq!(canonical_form(&up).0, canonical_form(&down).0);
        let v = vec![0b110, 0, 0];
        let wedge = vec![0b100, 0b100, 0];
        assert_ne!(canonical_form(&v).0, canonical_form(&wedge).0);
    }
}
