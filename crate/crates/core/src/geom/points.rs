//! Lattice-point enumeration in full-dimensional charts.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::polytope::{convex_hull, Halfspace};

/// Depth-first enumerator over the integer points of `t·Q` for a
/// full-dimensional lattice polytope `Q ⊂ R^k`.
///
/// Level `i` bounds coordinate `i` with the facets of the projection of `Q`
/// onto the first `i + 1` coordinates, so every partial assignment that is
/// visited extends to at least one real point of `t·Q`.
pub(crate) struct LatticePointCounter {
    dim: usize,
    projections: Vec<Vec<Halfspace>>,
}

enum Bounds {
    Empty,
    Range(BigInt, BigInt),
}

impl LatticePointCounter {
    /// `points` must be full-dimensional in their ambient space.
    pub fn new(points: &[Vec<BigInt>]) -> Self {
        let dim = points.first().map_or(0, Vec::len);
        let projections = (1..=dim)
            .map(|i| {
                let projected: BTreeSet<Vec<BigInt>> =
                    points.iter().map(|p| p[..i].to_vec()).collect();
                let projected: Vec<Vec<BigInt>> = projected.into_iter().collect();
                let hull = convex_hull(&projected);
                debug_assert_eq!(hull.dim, i, "projection must stay full-dimensional");
                hull.hrep.inequalities
            })
            .collect();
        LatticePointCounter { dim, projections }
    }

    fn bounds(&self, level: usize, t: &BigInt, prefix: &[BigInt]) -> Bounds {
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for h in &self.projections[level] {
            let mut s = &h.constant * t;
            for (a, x) in h.normal[..level].iter().zip(prefix) {
                s += a * x;
            }
            let a = &h.normal[level];
            if a.is_positive() {
                // a·x ≥ -s
                let b = (-s).div_ceil(a);
                if lo.as_ref().is_none_or(|l| &b > l) {
                    lo = Some(b);
                }
            } else if a.is_negative() {
                let b = s.div_floor(&-a);
                if hi.as_ref().is_none_or(|u| &b < u) {
                    hi = Some(b);
                }
            } else if s.is_negative() {
                return Bounds::Empty;
            }
        }
        match (lo, hi) {
            (Some(l), Some(u)) if l <= u => Bounds::Range(l, u),
            (Some(_), Some(_)) => Bounds::Empty,
            _ => unreachable!("projection of a polytope is bounded"),
        }
    }

    /// Number of lattice points in `t·Q`.
    pub fn count(&self, t: &BigInt) -> BigInt {
        if self.dim == 0 {
            return BigInt::one();
        }
        let mut prefix = Vec::with_capacity(self.dim);
        self.count_from(t, &mut prefix)
    }

    fn count_from(&self, t: &BigInt, prefix: &mut Vec<BigInt>) -> BigInt {
        let level = prefix.len();
        let Bounds::Range(lo, hi) = self.bounds(level, t, prefix) else {
            return BigInt::zero();
        };
        if level + 1 == self.dim {
            return hi - lo + 1;
        }
        let mut total = BigInt::zero();
        let mut x = lo;
        while x <= hi {
            prefix.push(x.clone());
            total += self.count_from(t, prefix);
            prefix.pop();
            x += 1;
        }
        total
    }

    /// Calls `visit` on every lattice point of `t·Q` in lexicographic order.
    pub fn for_each(&self, t: &BigInt, mut visit: impl FnMut(&[BigInt])) {
        let mut prefix = Vec::with_capacity(self.dim);
        self.walk(t, &mut prefix, &mut visit);
    }

    fn walk(&self, t: &BigInt, prefix: &mut Vec<BigInt>, visit: &mut impl FnMut(&[BigInt])) {
        if prefix.len() == self.dim {
            visit(prefix);
            return;
        }
        let Bounds::Range(lo, hi) = self.bounds(prefix.len(), t, prefix) else {
            return;
        };
        let mut x = lo;
        while x <= hi {
            prefix.push(x.clone());
            self.walk(t, prefix, visit);
            prefix.pop();
            x += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn triangle_counts() {
        let c = LatticePointCounter::new(&pts(&[&[0, 0], &[1, 0], &[0, 1]]));
        let counts: Vec<BigInt> = (1..=4).map(|t| c.count(&BigInt::from(t))).collect();
        assert_eq!(counts, pts(&[&[3, 6, 10, 15]])[0]);
    }

    #[test]
    fn skew_triangle_matches_box_scan() {
        let verts = pts(&[&[0, 0], &[5, 2], &[-1, 3]]);
        let c = LatticePointCounter::new(&verts);
        // brute force: sign tests against the three edges
        let inside = |x: i64, y: i64| {
            let e =
                |ax: i64, ay: i64, bx: i64, by: i64| (bx - ax) * (y - ay) - (by - ay) * (x - ax);
            e(0, 0, 5, 2) >= 0 && e(5, 2, -1, 3) >= 0 && e(-1, 3, 0, 0) >= 0
        };
        let brute = (-1..=5)
            .flat_map(|x| (0..=3).map(move |y| (x, y)))
            .filter(|&(x, y)| inside(x, y))
            .count();
        assert_eq!(c.count(&BigInt::one()), BigInt::from(brute));
        let mut seen = Vec::new();
        c.for_each(&BigInt::one(), |p| seen.push(p.to_vec()));
        assert_eq!(seen.len(), brute);
        let mut sorted = seen.clone();
        sorted.sort();
        assert_eq!(seen, sorted);
    }
}
