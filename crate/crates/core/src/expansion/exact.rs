use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_SUBSET_CAP: usize = 24;
/// Masks are `u32`.
pub const HARD_SUBSET_CAP: usize = 32;

/// Exact edge and vertex expansion with witnesses.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionMeasurement {
    pub n: usize,
    pub directed: bool,
    /// `min |e(S, S^c)| / |S|` over `1 <= |S| <= n/2`.
    pub h_e: BigRational,
    pub h_witness: Vec<usize>,
    pub h_cut: usize,
    /// `min |N(S)| / |S|` over the same sets.
    pub phi_v: BigRational,
    pub phi_witness: Vec<usize>,
    pub phi_boundary: usize,
    pub subset_cap: usize,
    pub subsets_examined: u64,
}

#[derive(Clone, Copy)]
struct Best {
    num: u64,
    den: u64,
    mask: u32,
}

impl Best {
    const NONE: Best = Best { num: 1, den: 0, mask: 0 };

    fn better_than(&self, other: &Best) -> bool {
        if other.den == 0 {
            return self.den != 0;
        }
        if self.den == 0 {
            return false;
        }
        let (a, b) = (self.num * other.den, other.num * self.den);
        a < b || (a == b && lex_less(self.mask, other.mask))
    }

    fn min(self, other: Best) -> Best {
        if other.better_than(&self) {
            other
        } else {
            self
        }
    }
}

/// Lexicographic order on the sorted vertex lists of two subsets.
fn lex_less(mut a: u32, mut b: u32) -> bool {
    loop {
        match (a, b) {
            (_, 0) => return false,
            (0, _) => return true,
            _ => {
                let (la, lb) = (a.trailing_zeros(), b.trailing_zeros());
                if la != lb {
                    return la < lb;
                }
                a &= a - 1;
                b &= b - 1;
            }
        }
    }
}

fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

/// Exhaustive edge and vertex expansion. Directed graphs count the arcs
/// leaving `S` and the out-neighbourhood of `S`.
///
/// Ties are broken towards the lexicographically smallest witness, so the
/// result does not depend on how the enumeration is scheduled.
pub fn exact_expansion(g: &Graph, cap: usize) -> Result<ExpansionMeasurement> {
    let n = g.n();
    if n > cap.min(HARD_SUBSET_CAP) {
        return Err(Error::CapExceeded { n, cap: cap.min(HARD_SUBSET_CAP) });
    }
    if n < 2 {
        return Err(Error::InvalidParameter("expansion needs at least 2 vertices".into()));
    }
    let out: Vec<u32> = (0..n)
        .map(|u| g.neighbors(u).iter().fold(0u32, |m, &v| m | 1 << v))
        .collect();
    let half = (n / 2) as u32;
    let total: u64 = 1u64 << n;
    let chunk: u64 = 1 << 14;
    let chunks = total.div_ceil(chunk);

    let (h, phi, examined) = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let (mut h, mut phi, mut seen) = (Best::NONE, Best::NONE, 0u64);
            let lo = (c * chunk).max(1);
            let hi = ((c + 1) * chunk).min(total);
            for s in lo..hi {
                let s = s as u32;
                let size = s.count_ones();
                if size > half {
                    continue;
                }
                seen += 1;
                let (mut cut, mut nbr) = (0u32, 0u32);
                let mut rest = s;
                while rest != 0 {
                    let u = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    cut += (out[u] & !s).count_ones();
                    nbr |= out[u];
                }
                nbr &= !s;
                h = h.min(Best { num: cut.into(), den: size.into(), mask: s });
                phi = phi.min(Best { num: nbr.count_ones().into(), den: size.into(), mask: s });
            }
            (h, phi, seen)
        })
        .reduce(
            || (Best::NONE, Best::NONE, 0),
            |a, b| (a.0.min(b.0), a.1.min(b.1), a.2 + b.2),
        );

    Ok(ExpansionMeasurement {
        n,
        directed: g.is_directed(),
        h_e: BigRational::new(BigInt::from(h.num), BigInt::from(h.den)),
        h_witness: members(h.mask),
        h_cut: h.num as usize,
        phi_v: BigRational::new(BigInt::from(phi.num), BigInt::from(phi.den)),
        phi_witness: members(phi.mask),
        phi_boundary: phi.num as usize,
        subset_cap: cap,
        subsets_examined: examined,
    })
}

/// `|e(S, S^c)|` for an explicit vertex set.
pub fn cut_size(g: &Graph, set: &[usize]) -> usize {
    let inside = membership(g.n(), set);
    set.iter()
        .flat_map(|&u| g.neighbors(u))
        .filter(|&&v| !inside[v])
        .count()
}

/// `|e(S^c, S)|`, arcs entering the set.
pub fn reverse_cut_size(g: &Graph, set: &[usize]) -> usize {
    let inside = membership(g.n(), set);
    set.iter()
        .flat_map(|&u| g.in_neighbors(u))
        .filter(|&&v| !inside[v])
        .count()
}

/// `|N(S)|`, out-neighbours outside the set.
pub fn boundary_size(g: &Graph, set: &[usize]) -> usize {
    let inside = membership(g.n(), set);
    let mut hit = vec![false; g.n()];
    for &u in set {
        for &v in g.neighbors(u) {
            if !inside[v] {
                hit[v] = true;
            }
        }
    }
    hit.into_iter().filter(|&b| b).count()
}

fn membership(n: usize, set: &[usize]) -> Vec<bool> {
    let mut inside = vec![false; n];
    for &u in set {
        inside[u] = true;
    }
    inside
}
