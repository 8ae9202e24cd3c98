use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{IntMatrix, SparseMatrix};

/// Smith normal form `U·M·V = D`; `diagonal` holds the nonzero diagonal
/// entries `d₁ | d₂ | ⋯`, all positive.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub u: Option<IntMatrix>,
    pub v: Option<IntMatrix>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

fn smallest_nonzero(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let v = a.get(i, j);
            if v.is_zero() {
                continue;
            }
            let abs = v.abs();
            if best.as_ref().is_none_or(|(_, _, b)| abs < *b) {
                let unit = abs.is_one();
                best = Some((i, j, abs));
                if unit {
                    let (i, j, _) = best.unwrap();
                    return Some((i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Dense Smith normal form. The pivot is always the entry of least absolute
/// value; row operations are mirrored on `U`, column operations on `V`.
pub fn smith_normal_form(m: &IntMatrix, with_transforms: bool) -> SmithForm {
    let mut a = m.clone();
    let mut u = with_transforms.then(|| IntMatrix::identity(m.rows()));
    let mut v = with_transforms.then(|| IntMatrix::identity(m.cols()));
    let mut diagonal = Vec::new();
    let steps = m.rows().min(m.cols());
    for t in 0..steps {
        let Some((pi, pj)) = smallest_nonzero(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        if let Some(u) = u.as_mut() {
            u.swap_rows(t, pi);
        }
        if let Some(v) = v.as_mut() {
            v.swap_cols(t, pj);
        }
        loop {
            let pivot = a.get(t, t).clone();
            let mut remainder = false;
            for i in t + 1..a.rows() {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = -a.get(i, t).div_floor(&pivot);
                a.add_row(i, t, &q);
                if let Some(u) = u.as_mut() {
                    u.add_row(i, t, &q);
                }
                remainder |= !a.get(i, t).is_zero();
            }
            for j in t + 1..a.cols() {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = -a.get(t, j).div_floor(&pivot);
                a.add_col(j, t, &q);
                if let Some(v) = v.as_mut() {
                    v.add_col(j, t, &q);
                }
                remainder |= !a.get(t, j).is_zero();
            }
            if remainder {
                // a smaller entry appeared in the pivot row or column
                let mut best = (t, t, a.abs_at(t, t));
                for i in t + 1..a.rows() {
                    let x = a.abs_at(i, t);
                    if !x.is_zero() && x < best.2 {
                        best = (i, t, x);
                    }
                }
                for j in t + 1..a.cols() {
                    let x = a.abs_at(t, j);
                    if !x.is_zero() && x < best.2 {
                        best = (t, j, x);
                    }
                }
                a.swap_rows(t, best.0);
                a.swap_cols(t, best.1);
                if let Some(u) = u.as_mut() {
                    u.swap_rows(t, best.0);
                }
                if let Some(v) = v.as_mut() {
                    v.swap_cols(t, best.1);
                }
                continue;
            }
            let bad = (t + 1..a.rows()).find(|&i| {
                (t + 1..a.cols()).any(|j| !a.get(i, j).is_multiple_of(&pivot))
            });
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row(t, i, &one);
                    if let Some(u) = u.as_mut() {
                        u.add_row(t, i, &one);
                    }
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            if let Some(u) = u.as_mut() {
                u.negate_row(t);
            }
        }
        diagonal.push(a.get(t, t).clone());
    }
    SmithForm { diagonal, u, v }
}

/// Nonzero elementary divisors of a sparse matrix. Unit pivots are removed
/// first (each contributes a divisor 1 and leaves the Schur complement),
/// preferring pivots whose row and column are short; what is left goes
/// through the dense Smith form.
pub fn elementary_divisors(m: &SparseMatrix) -> Vec<BigInt> {
    let mut rows: Vec<HashMap<usize, BigInt>> = m
        .row_lists()
        .into_iter()
        .map(|r| r.into_iter().collect())
        .collect();
    let mut cols: Vec<HashSet<usize>> = vec![HashSet::new(); m.cols()];
    for (r, row) in rows.iter().enumerate() {
        for &c in row.keys() {
            cols[c].insert(r);
        }
    }
    let mut units = 0usize;
    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                continue;
            }
            for (&c, v) in row {
                if v.abs().is_one() {
                    let cost = (row.len() - 1) * (cols[c].len() - 1);
                    if best.is_none_or(|b| (cost, r, c) < b) {
                        best = Some((cost, r, c));
                    }
                }
            }
            if matches!(best, Some((0, _, _))) {
                break;
            }
        }
        let Some((_, pr, pc)) = best else { break };
        let pivot = rows[pr][&pc].clone();
        let pivot_row: Vec<(usize, BigInt)> = rows[pr].iter().map(|(&c, v)| (c, v.clone())).collect();
        let others: Vec<usize> = cols[pc].iter().copied().filter(|&r| r != pr).collect();
        for r in others {
            // pivot is ±1, so its inverse is itself
            let factor = &rows[r][&pc] * &pivot;
            for (c, v) in &pivot_row {
                let entry = rows[r].entry(*c).or_insert_with(BigInt::zero);
                *entry -= &factor * v;
                if entry.is_zero() {
                    rows[r].remove(c);
                    cols[*c].remove(&r);
                } else {
                    cols[*c].insert(r);
                }
            }
        }
        for (c, _) in &pivot_row {
            cols[*c].remove(&pr);
        }
        rows[pr].clear();
        units += 1;
    }
    let live_rows: Vec<usize> = (0..rows.len()).filter(|&r| !rows[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..cols.len()).filter(|&c| !cols[c].is_empty()).collect();
    let col_pos: HashMap<usize, usize> = live_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut rest = IntMatrix::zeros(live_rows.len(), live_cols.len());
    for (i, &r) in live_rows.iter().enumerate() {
        for (c, v) in &rows[r] {
            rest.set(i, col_pos[c], v.clone());
        }
    }
    let mut out = vec![BigInt::one(); units];
    out.extend(smith_normal_form(&rest, false).diagonal);
    out
}
