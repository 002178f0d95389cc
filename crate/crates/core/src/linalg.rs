//! Sparse free modules and tensor legs.
//!
//! An element of a based vector space is stored as a sorted map from
//! basis indices to nonzero rational coefficients.  The indices are
//! arbitrary ordered types: integers for group-like towers, pairs for
//! tensor squares, nested pairs for doubles.  Keeping the map free of
//! explicit zeros makes equality structural, which is what the
//! verification layer compares.
//!
//! Tensor products are just elements indexed by tuples.  The `lin*`
//! helpers extend basis-level maps linearly; the `leg*` helpers apply a
//! linear map to one tensor factor while carrying the others along.

use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt::Debug;

/// Basis index bound.  `Ord` gives canonical term order, the rest lets
/// instances be shared across threads and printed in diagnostics.
pub trait Idx: Clone + Ord + Eq + Debug + Send + Sync + 'static {}
impl<T: Clone + Ord + Eq + Debug + Send + Sync + 'static> Idx for T {}

/// A finitely supported linear combination of basis vectors of type `I`.
///
/// Invariant: no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Elem<I: Idx> {
    terms: BTreeMap<I, Scalar>,
}

/// Tensor square: elements indexed by ordered pairs.
pub type Tensor2<I, J> = Elem<(I, J)>;
/// Tensor cube.
pub type Tensor3<I, J, K> = Elem<(I, J, K)>;

impl<I: Idx> Default for Elem<I> {
    fn default() -> Self {
        Elem::zero()
    }
}

impl<I: Idx> Elem<I> {
    pub fn zero() -> Self {
        Elem { terms: BTreeMap::new() }
    }

    /// The basis vector `i`.
    pub fn basis(i: I) -> Self {
        Elem::single(i, Scalar::one())
    }

    /// `c * i`, dropped if `c == 0`.
    pub fn single(i: I, c: Scalar) -> Self {
        let mut e = Elem::zero();
        e.add_term(i, c);
        e
    }

    pub fn from_terms(it: impl IntoIterator<Item = (I, Scalar)>) -> Self {
        let mut e = Elem::zero();
        for (i, c) in it {
            e.add_term(i, c);
        }
        e
    }

    /// Adds `c * i` in place, removing the entry if it cancels to zero.
    pub fn add_term(&mut self, i: I, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&i) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&i);
                }
            }
            None => {
                self.terms.insert(i, c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &Elem<I>) {
        for (i, c) in &other.terms {
            self.add_term(i.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Elem<I>) -> Elem<I> {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Elem<I>) -> Elem<I> {
        let mut out = self.clone();
        for (i, c) in &other.terms {
            out.add_term(i.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Elem<I> {
        self.scale(&Scalar::int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> Elem<I> {
        if c.is_zero() {
            return Elem::zero();
        }
        Elem {
            terms: self.terms.iter().map(|(i, a)| (i.clone(), a * c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: &I) -> Scalar {
        self.terms.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&I, &Scalar)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &I> {
        self.terms.keys()
    }

    /// Linear extension of a basis-level map `I -> Elem<J>`.
    pub fn map<J: Idx>(&self, f: impl Fn(&I) -> Elem<J>) -> Elem<J> {
        let mut out = Elem::zero();
        for (i, c) in &self.terms {
            let img = f(i);
            for (j, d) in &img.terms {
                out.add_term(j.clone(), c * d);
            }
        }
        out
    }

    /// Linear extension of a basis-level relabeling `I -> J`.
    pub fn map_basis<J: Idx>(&self, f: impl Fn(&I) -> J) -> Elem<J> {
        let mut out = Elem::zero();
        for (i, c) in &self.terms {
            out.add_term(f(i), c.clone());
        }
        out
    }

    /// Applies a linear functional given on basis vectors.
    pub fn eval(&self, f: impl Fn(&I) -> Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (i, c) in &self.terms {
            out += c * &f(i);
        }
        out
    }

    /// Tensor product `self (x) other`.
    pub fn tensor<J: Idx>(&self, other: &Elem<J>) -> Tensor2<I, J> {
        let mut out = Elem::zero();
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                out.add_term((i.clone(), j.clone()), a * b);
            }
        }
        out
    }

    /// Renders the element with a caller-supplied basis formatter.
    ///
    /// The coefficient is always printed, so `-1*b` rather than `-b`;
    /// canonical output is what the report layer diffs.
    pub fn render(&self, fmt_basis: impl Fn(&I) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (i, c) in &self.terms {
            parts.push(format!("{}*{}", c.render(), fmt_basis(i)));
        }
        parts.join(" + ")
    }
}

/// Bilinear extension of a basis-level map.
pub fn lin2<I: Idx, J: Idx, K: Idx>(
    f: impl Fn(&I, &J) -> Elem<K>,
    x: &Elem<I>,
    y: &Elem<J>,
) -> Elem<K> {
    let mut out = Elem::zero();
    for (i, a) in x.terms() {
        for (j, b) in y.terms() {
            let img = f(i, j);
            let c = a * b;
            for (k, d) in img.terms() {
                out.add_term(k.clone(), &c * d);
            }
        }
    }
    out
}

/// Scalar-valued bilinear extension (pairings).
pub fn lin2_scalar<I: Idx, J: Idx>(
    f: impl Fn(&I, &J) -> Scalar,
    x: &Elem<I>,
    y: &Elem<J>,
) -> Scalar {
    let mut out = Scalar::zero();
    for (i, a) in x.terms() {
        for (j, b) in y.terms() {
            out += &(a * b) * &f(i, j);
        }
    }
    out
}

/// Applies `f` to the first tensor leg, linearly.
pub fn leg1<I: Idx, J: Idx, I2: Idx>(
    t: &Tensor2<I, J>,
    f: impl Fn(&I) -> Elem<I2>,
) -> Tensor2<I2, J> {
    let mut out = Elem::zero();
    for ((i, j), c) in t.terms() {
        for (i2, d) in f(i).terms() {
            out.add_term((i2.clone(), j.clone()), c * d);
        }
    }
    out
}

/// Applies `f` to the second tensor leg, linearly.
pub fn leg2<I: Idx, J: Idx, J2: Idx>(
    t: &Tensor2<I, J>,
    f: impl Fn(&J) -> Elem<J2>,
) -> Tensor2<I, J2> {
    let mut out = Elem::zero();
    for ((i, j), c) in t.terms() {
        for (j2, d) in f(j).terms() {
            out.add_term((i.clone(), j2.clone()), c * d);
        }
    }
    out
}

/// Swaps the two legs of a tensor square.
pub fn swap<I: Idx, J: Idx>(t: &Tensor2<I, J>) -> Tensor2<J, I> {
    t.map_basis(|(i, j)| (j.clone(), i.clone()))
}

/// Contracts the first leg with a functional, leaving the second.
pub fn contract1<I: Idx, J: Idx>(t: &Tensor2<I, J>, f: impl Fn(&I) -> Scalar) -> Elem<J> {
    let mut out = Elem::zero();
    for ((i, j), c) in t.terms() {
        out.add_term(j.clone(), c * &f(i));
    }
    out
}

/// Contracts the second leg with a functional, leaving the first.
pub fn contract2<I: Idx, J: Idx>(t: &Tensor2<I, J>, f: impl Fn(&J) -> Scalar) -> Elem<I> {
    let mut out = Elem::zero();
    for ((i, j), c) in t.terms() {
        out.add_term(i.clone(), c * &f(j));
    }
    out
}

/// Regroups `(I, (J, K))` as `((I, J), K)`.
pub fn assoc_l<I: Idx, J: Idx, K: Idx>(t: &Tensor2<I, (J, K)>) -> Tensor2<(I, J), K> {
    t.map_basis(|(i, (j, k))| ((i.clone(), j.clone()), k.clone()))
}

/// Regroups `((I, J), K)` as `(I, (J, K))`.
pub fn assoc_r<I: Idx, J: Idx, K: Idx>(t: &Tensor2<(I, J), K>) -> Tensor2<I, (J, K)> {
    t.map_basis(|((i, j), k)| (i.clone(), (j.clone(), k.clone())))
}

/// Flattens a pair-of-pairs index into a triple.
pub fn flatten3_l<I: Idx, J: Idx, K: Idx>(t: &Tensor2<(I, J), K>) -> Tensor3<I, J, K> {
    t.map_basis(|((i, j), k)| (i.clone(), j.clone(), k.clone()))
}

/// Flattens an `(I, (J, K))` index into a triple.
pub fn flatten3_r<I: Idx, J: Idx, K: Idx>(t: &Tensor2<I, (J, K)>) -> Tensor3<I, J, K> {
    t.map_basis(|(i, (j, k))| (i.clone(), j.clone(), k.clone()))
}

/// Solves a square linear system by Gaussian elimination.  Exact, so
/// any nonzero pivot works.  Returns None on a singular matrix.
pub fn solve_square(mut mat: Vec<Vec<Scalar>>, mut rhs: Vec<Scalar>) -> Option<Vec<Scalar>> {
    let n = mat.len();
    assert!(mat.iter().all(|row| row.len() == n) && rhs.len() == n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !mat[r][col].is_zero())?;
        mat.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = mat[col][col].inv();
        for c in col..n {
            mat[col][c] = mat[col][c].clone() * inv.clone();
        }
        rhs[col] = rhs[col].clone() * inv;
        for r in 0..n {
            if r == col || mat[r][col].is_zero() {
                continue;
            }
            let f = mat[r][col].clone();
            for c in col..n {
                let v = mat[col][c].clone() * f.clone();
                mat[r][c] = mat[r][c].clone() - v;
            }
            let v = rhs[col].clone() * f;
            rhs[r] = rhs[r].clone() - v;
        }
    }
    Some(rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: i64) -> Elem<i64> {
        Elem::basis(i)
    }

    #[test]
    fn zeros_are_never_stored() {
        let mut x = Elem::zero();
        x.add_term(3, Scalar::int(2));
        x.add_term(3, Scalar::int(-2));
        assert!(x.is_zero());
        assert_eq!(x, Elem::<i64>::zero());

        let y = Elem::single(1, Scalar::zero());
        assert!(y.is_zero());
    }

    #[test]
    fn addition_merges_support() {
        let x = e(1).add(&e(2).scale(&Scalar::int(3)));
        let y = e(2).scale(&Scalar::int(-3)).add(&e(5));
        let s = x.add(&y);
        assert_eq!(s, e(1).add(&e(5)));
    }

    #[test]
    fn linear_extension_distributes() {
        let x = e(1).add(&e(2));
        let doubled = x.map(|i| Elem::single(i * 10, Scalar::int(2)));
        assert_eq!(
            doubled,
            Elem::from_terms([(10, Scalar::int(2)), (20, Scalar::int(2))])
        );
    }

    #[test]
    fn tensor_and_legs_commute() {
        let x = e(1).add(&e(2));
        let y = e(7).sub(&e(8));
        let t = x.tensor(&y);
        // f on leg 1, g on leg 2, in either order
        let f = |i: &i64| Elem::single(i + 100, Scalar::int(1));
        let g = |j: &i64| Elem::single(j - 100, Scalar::int(1));
        let a = leg2(&leg1(&t, f), g);
        let b = leg1(&leg2(&t, g), f);
        assert_eq!(a, b);
    }

    #[test]
    fn swap_is_involutive() {
        let t = e(1).tensor(&e(2)).add(&e(3).tensor(&e(4)).scale(&Scalar::int(-5)));
        assert_eq!(swap(&swap(&t)), t);
    }

    #[test]
    fn contraction_against_delta() {
        let t = e(1).tensor(&e(2)).add(&e(9).tensor(&e(2)).scale(&Scalar::int(4)));
        let picked = contract1(&t, |i| {
            if *i == 9 {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        assert_eq!(picked, e(2).scale(&Scalar::int(4)));
    }

    #[test]
    fn render_is_canonical() {
        let x = Elem::from_terms([(2, Scalar::int(-1)), (1, Scalar::int(3))]);
        assert_eq!(x.render(|i| format!("v{i}")), "3*v1 + -1*v2");
        assert_eq!(Elem::<i64>::zero().render(|i| format!("v{i}")), "0");
    }
}
