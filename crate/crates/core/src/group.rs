//! Finite groups and the two algebras they carry: functions with
//! pointwise product and the group algebra.  Both are finite
//! dimensional, so every structure map is total and the window is the
//! whole basis regardless of radius.
//!
//! The two sides are dual to each other through the Kronecker pairing
//! of point masses against group elements, and the canonical element
//! sum delta_p (x) u_p implements that duality inside the tensor
//! square.  That element is small enough to invert numerically, which
//! gives an oracle for its closed-form inverse.

use crate::linalg::{solve_square, Elem, Tensor2};
use crate::mha::{GrouplikeMul, IntegralData, MhaInstance, MulEntry, TwoLegMultiplier};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::sync::Arc;

/// A finite group as a multiplication table over indices 0..n.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    pub label: String,
    pub names: Vec<String>,
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
    pub e: usize,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i][j]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inv[i]
    }

    /// p q p^{-1}.
    pub fn conj(&self, p: usize, q: usize) -> usize {
        self.mul(self.mul(p, q), self.inv(p))
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (0..n).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Rebuilds identity and inverses from the table and checks the
    /// group laws, naming the first offending triple.
    pub fn validate(&self) -> Result<(), String> {
        let n = self.order();
        if n == 0 {
            return Err("empty group".into());
        }
        for (i, row) in self.mul.iter().enumerate() {
            if row.len() != n {
                return Err(format!("row {} has {} entries, expected {}", i, row.len(), n));
            }
        }
        let e = self.e;
        for i in 0..n {
            if self.mul(e, i) != i || self.mul(i, e) != i {
                return Err(format!("{} is not an identity at {}", self.names[e], self.names[i]));
            }
            let v = self.inv(i);
            if self.mul(i, v) != e || self.mul(v, i) != e {
                return Err(format!("{} has no two-sided inverse", self.names[i]));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.mul(self.mul(i, j), k) != self.mul(i, self.mul(j, k)) {
                        return Err(format!(
                            "associativity fails at ({}, {}, {})",
                            self.names[i], self.names[j], self.names[k]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Parses a multiplication table: first line is the element names
    /// in order, each following line i lists the products i*j by name.
    /// Blank lines and `#` comments are skipped.
    pub fn from_cayley(label: &str, text: &str) -> Result<FiniteGroup, String> {
        let lines: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        let header = lines.first().ok_or("empty table")?;
        let names: Vec<String> = header.split_whitespace().map(str::to_string).collect();
        let n = names.len();
        {
            let mut seen = names.clone();
            seen.sort();
            seen.dedup();
            if seen.len() != n {
                return Err("duplicate element name in header".into());
            }
        }
        if lines.len() != n + 1 {
            return Err(format!("expected {} table rows, found {}", n, lines.len() - 1));
        }
        let index: BTreeMap<&str, usize> =
            names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let mut mul = vec![vec![0usize; n]; n];
        for (i, line) in lines[1..].iter().enumerate() {
            let row: Vec<&str> = line.split_whitespace().collect();
            if row.len() != n {
                return Err(format!("row for {} has {} entries, expected {}", names[i], row.len(), n));
            }
            for (j, cell) in row.iter().enumerate() {
                mul[i][j] = *index
                    .get(cell)
                    .ok_or_else(|| format!("unknown element {} in row for {}", cell, names[i]))?;
            }
        }
        let e = (0..n)
            .find(|&c| (0..n).all(|i| mul[c][i] == i && mul[i][c] == i))
            .ok_or("table has no identity element")?;
        let mut inv = vec![0usize; n];
        for i in 0..n {
            inv[i] = (0..n)
                .find(|&j| mul[i][j] == e && mul[j][i] == e)
                .ok_or_else(|| format!("{} has no two-sided inverse", names[i]))?;
        }
        let g = FiniteGroup { label: label.to_string(), names, mul, inv, e };
        g.validate()?;
        Ok(g)
    }
}

/// Z_n with elements e, c, c2, ...
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n > 0);
    let names = (0..n)
        .map(|k| match k {
            0 => "e".to_string(),
            1 => "c".to_string(),
            k => format!("c{k}"),
        })
        .collect();
    let mul = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let inv = (0..n).map(|i| (n - i) % n).collect();
    FiniteGroup { label: format!("Z{n}"), names, mul, inv, e: 0 }
}

/// The symmetric group on three letters, generated by a 3-cycle r and
/// a transposition s with s r s = r^{-1}.
pub fn s3() -> FiniteGroup {
    // e, r, r2, s, rs, r2s with r^3 = s^2 = e.
    let names: Vec<String> =
        ["e", "r", "r2", "s", "rs", "r2s"].iter().map(|s| s.to_string()).collect();
    // Represent i as (rot, flip): index = rot + 3*flip, product
    // (a,x)(b,y) = (a + (-1)^x b, x + y).
    let decode = |i: usize| (i % 3, i / 3);
    let encode = |rot: usize, flip: usize| (rot % 3) + 3 * (flip % 2);
    let mul: Vec<Vec<usize>> = (0..6)
        .map(|i| {
            (0..6)
                .map(|j| {
                    let (a, x) = decode(i);
                    let (b, y) = decode(j);
                    let rot = if x == 0 { (a + b) % 3 } else { (a + 3 - b % 3) % 3 };
                    encode(rot, x + y)
                })
                .collect()
        })
        .collect();
    let mut inv = vec![0usize; 6];
    for i in 0..6 {
        inv[i] = (0..6).find(|&j| mul[i][j] == 0).unwrap();
    }
    let g = FiniteGroup { label: "S3".into(), names, mul, inv, e: 0 };
    debug_assert!(g.validate().is_ok());
    g
}

fn all_indices(n: usize) -> Arc<dyn Fn(u32) -> Vec<usize> + Send + Sync> {
    Arc::new(move |_| (0..n).collect())
}

fn sum_of_coeffs(f: &Elem<usize>) -> Scalar {
    let mut s = Scalar::zero();
    for (_, c) in f.terms() {
        s += c;
    }
    s
}

/// Functions on G under the pointwise product, with the coproduct dual
/// to group multiplication.
pub fn group_function_algebra(g: &FiniteGroup) -> Arc<MhaInstance<usize>> {
    let n = g.order();
    let product = Arc::new(move |i: &usize, j: &usize| -> Elem<usize> {
        if i == j {
            Elem::basis(*i)
        } else {
            Elem::zero()
        }
    });
    let g1 = g.clone();
    let cov_right = Arc::new(move |x: &usize, y: &usize| -> Tensor2<usize, usize> {
        // Delta(d_g)(1 (x) d_h) = d_{g h^{-1}} (x) d_h.
        Elem::basis((g1.mul(*x, g1.inv(*y)), *y))
    });
    let g2 = g.clone();
    let cov_left = Arc::new(move |x: &usize, y: &usize| -> Tensor2<usize, usize> {
        // (d_x (x) 1)Delta(d_g) = d_x (x) d_{x^{-1} g}.
        Elem::basis((*x, g2.mul(g2.inv(*x), *y)))
    });
    let g3 = g.clone();
    let full = Arc::new(move |x: &usize| -> Tensor2<usize, usize> {
        let mut out = Elem::zero();
        for a in 0..g3.order() {
            out.add_term((a, g3.mul(g3.inv(a), *x)), Scalar::one());
        }
        out
    });
    let e = g.e;
    let counit = Arc::new(move |x: &usize| {
        if *x == e {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    let g4 = g.clone();
    let antipode = Arc::new(move |x: &usize| Elem::basis(g4.inv(*x)));
    let antipode_inv = antipode.clone();
    let g5 = g.clone();
    let fmt = Arc::new(move |i: &usize| format!("d[{}]", g5.name(*i)));
    let one: Elem<usize> = Elem::from_terms((0..n).map(|i| (i, Scalar::one())));
    let eg = g.e;
    let integrals = IntegralData {
        left_integral: Arc::new(sum_of_coeffs),
        right_integral: Arc::new(sum_of_coeffs),
        cointegral: Some(Elem::basis(g.e)),
        modular: Some(GrouplikeMul::trivial()),
        // The dual side is unimodular as well; its modular element
        // pairs as evaluation at the identity.
        dual_modular_pairing: Some(Arc::new(move |_j: i64, f: &Elem<usize>| f.coeff(&eg))),
    };
    Arc::new(MhaInstance {
        name: format!("group-fn({})", g.label),
        one: Some(one),
        local_unit: None,
        product,
        cov_right,
        cov_left,
        counit,
        antipode,
        antipode_inv,
        full_coproduct: Some(full),
        window: all_indices(n),
        fmt_basis: fmt,
        integrals: Some(integrals),
    })
}

/// The group algebra, with grouplike basis elements.
pub fn group_algebra(g: &FiniteGroup) -> Arc<MhaInstance<usize>> {
    let n = g.order();
    let g0 = g.clone();
    let product =
        Arc::new(move |i: &usize, j: &usize| -> Elem<usize> { Elem::basis(g0.mul(*i, *j)) });
    let g1 = g.clone();
    let cov_right =
        Arc::new(move |x: &usize, y: &usize| -> Tensor2<usize, usize> {
            Elem::basis((*x, g1.mul(*x, *y)))
        });
    let g2 = g.clone();
    let cov_left =
        Arc::new(move |x: &usize, y: &usize| -> Tensor2<usize, usize> {
            Elem::basis((g2.mul(*x, *y), *y))
        });
    let full = Arc::new(move |x: &usize| -> Tensor2<usize, usize> { Elem::basis((*x, *x)) });
    let counit = Arc::new(move |_: &usize| Scalar::one());
    let g4 = g.clone();
    let antipode = Arc::new(move |x: &usize| Elem::basis(g4.inv(*x)));
    let antipode_inv = antipode.clone();
    let g5 = g.clone();
    let fmt = Arc::new(move |i: &usize| format!("u[{}]", g5.name(*i)));
    let e = g.e;
    let point_at_identity = Arc::new(move |f: &Elem<usize>| f.coeff(&e));
    let integrals = IntegralData {
        left_integral: point_at_identity.clone(),
        right_integral: point_at_identity,
        cointegral: Some(Elem::from_terms((0..n).map(|i| (i, Scalar::one())))),
        modular: Some(GrouplikeMul::trivial()),
        // The dual modular element is the unit of the function side,
        // which pairs as the sum of coefficients.
        dual_modular_pairing: Some(Arc::new(move |_j: i64, f: &Elem<usize>| sum_of_coeffs(f))),
    };
    Arc::new(MhaInstance {
        name: format!("group-alg({})", g.label),
        one: Some(Elem::basis(g.e)),
        local_unit: None,
        product,
        cov_right,
        cov_left,
        counit,
        antipode,
        antipode_inv,
        full_coproduct: Some(full),
        window: all_indices(n),
        fmt_basis: fmt,
        integrals: Some(integrals),
    })
}

/// Kronecker pairing of a group-algebra element against a function.
pub fn group_pairing(u: &usize, d: &usize) -> Scalar {
    if u == d {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

/// The identity R-matrix.  It is quasitriangular exactly when the
/// coproduct is already cocommutative, which the callers must decide.
pub fn trivial_r<I: crate::linalg::Idx>() -> TwoLegMultiplier<I> {
    TwoLegMultiplier {
        tag: "1(x)1".into(),
        cover_left: Arc::new(move |i: &I| vec![(Elem::basis(i.clone()), unit_entry())]),
        cover_right: Arc::new(move |i: &I| vec![(Elem::basis(i.clone()), unit_entry())]),
        snd_cover_left: Some(Arc::new(move |j: &I| vec![(unit_entry(), Elem::basis(j.clone()))])),
        snd_cover_right: Some(Arc::new(move |j: &I| vec![(unit_entry(), Elem::basis(j.clone()))])),
    }
}

fn unit_entry<I: crate::linalg::Idx>() -> MulEntry<I> {
    MulEntry::Grouplike(GrouplikeMul::trivial())
}

/// sum_p d_p (x) u_p as an honest element of the tensor square, with
/// an optional dropped term for the corrupted control.
pub fn w_element(g: &FiniteGroup, drop: Option<usize>) -> Tensor2<usize, usize> {
    let mut out = Elem::zero();
    for p in 0..g.order() {
        if Some(p) == drop {
            continue;
        }
        out.add_term((p, p), Scalar::one());
    }
    out
}

/// Product in functions (x) group algebra.
pub fn mixed_mul(
    g: &FiniteGroup,
    s: &Tensor2<usize, usize>,
    t: &Tensor2<usize, usize>,
) -> Tensor2<usize, usize> {
    let mut out = Elem::zero();
    for ((i, j), c) in s.terms() {
        for ((k, l), d) in t.terms() {
            if i == k {
                out.add_term((*i, g.mul(*j, *l)), c.clone() * d.clone());
            }
        }
    }
    out
}

/// Inverts left multiplication by `w` in functions (x) group algebra
/// by solving exactly for the preimage of the unit.  Returns None when
/// the multiplication operator is singular.
pub fn invert_mixed(g: &FiniteGroup, w: &Tensor2<usize, usize>) -> Option<Tensor2<usize, usize>> {
    let n = g.order();
    let dim = n * n;
    let pos = |i: usize, j: usize| i * n + j;
    let mut mat = vec![vec![Scalar::zero(); dim]; dim];
    for k in 0..n {
        for l in 0..n {
            let prod = mixed_mul(g, w, &Elem::basis((k, l)));
            for ((i, j), c) in prod.terms() {
                mat[pos(*i, *j)][pos(k, l)] = c.clone();
            }
        }
    }
    let mut rhs = vec![Scalar::zero(); dim];
    for i in 0..n {
        rhs[pos(i, g.e)] = Scalar::one();
    }
    let sol = solve_square(mat, rhs)?;
    let mut out = Elem::zero();
    for k in 0..n {
        for l in 0..n {
            let c = sol[pos(k, l)].clone();
            if !c.is_zero() {
                out.add_term((k, l), c);
            }
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_tables_are_groups() {
        assert!(s3().validate().is_ok());
        assert!(cyclic(4).validate().is_ok());
        assert!(cyclic(1).validate().is_ok());
        assert!(!s3().is_abelian());
        assert!(cyclic(4).is_abelian());
    }

    #[test]
    fn s3_relations() {
        let g = s3();
        let r = g.index_of("r").unwrap();
        let s = g.index_of("s").unwrap();
        let r2 = g.index_of("r2").unwrap();
        assert_eq!(g.mul(r, r), r2);
        assert_eq!(g.mul(g.mul(r, r), r), g.e);
        assert_eq!(g.mul(s, s), g.e);
        // s r s = r^{-1}.
        assert_eq!(g.mul(g.mul(s, r), s), r2);
        assert_eq!(g.inv(r), r2);
    }

    #[test]
    fn cayley_round_trip() {
        let g = s3();
        let mut text = g.names.join(" ");
        text.push('\n');
        for i in 0..6 {
            let row: Vec<&str> = (0..6).map(|j| g.name(g.mul(i, j))).collect();
            text.push_str(&row.join(" "));
            text.push('\n');
        }
        let parsed = FiniteGroup::from_cayley("file", &text).unwrap();
        assert_eq!(parsed.mul, g.mul);
        assert_eq!(parsed.e, g.e);
        assert_eq!(parsed.inv, g.inv);
    }

    #[test]
    fn cayley_rejects_broken_tables() {
        // A table whose only failure is associativity: swap two
        // entries in a valid table.
        let g = cyclic(3);
        let mut text = g.names.join(" ");
        text.push('\n');
        for i in 0..3 {
            let row: Vec<&str> = (0..3)
                .map(|j| {
                    // Corrupt one off-diagonal cell.
                    if (i, j) == (1, 2) {
                        g.name(g.mul(1, 1))
                    } else {
                        g.name(g.mul(i, j))
                    }
                })
                .collect();
            text.push_str(&row.join(" "));
            text.push('\n');
        }
        let err = FiniteGroup::from_cayley("file", &text).unwrap_err();
        assert!(
            err.contains("inverse") || err.contains("associativity") || err.contains("identity"),
            "{err}"
        );
    }

    #[test]
    fn w_inverse_matches_the_antipode_slice() {
        for g in [cyclic(4), s3()] {
            let w = w_element(&g, None);
            let winv = invert_mixed(&g, &w).expect("w is invertible");
            let mut expect = Elem::zero();
            for p in 0..g.order() {
                expect.add_term((g.inv(p), p), Scalar::one());
            }
            assert_eq!(winv, expect);
            // Two-sided.
            let unit: Tensor2<usize, usize> =
                Elem::from_terms((0..g.order()).map(|i| ((i, g.e), Scalar::one())));
            assert_eq!(mixed_mul(&g, &w, &winv), unit);
            assert_eq!(mixed_mul(&g, &winv, &w), unit);
        }
    }

    #[test]
    fn dropped_w_term_is_not_invertible() {
        let g = cyclic(4);
        let w = w_element(&g, Some(1));
        assert!(invert_mixed(&g, &w).is_none());
    }

    #[test]
    fn both_group_sides_satisfy_the_axioms() {
        use crate::axioms::check_mha_axioms;
        use crate::report::{Status, SuiteRun};
        for g in [cyclic(4), s3()] {
            for inst in [group_function_algebra(&g), group_algebra(&g)] {
                let mut run = SuiteRun::new("mha-axioms", inst.name.clone());
                check_mha_axioms(&inst, 4, 9, &mut run);
                let rep = run.finish();
                assert_eq!(
                    rep.status,
                    Status::Pass,
                    "{}: {:?}",
                    rep.instance,
                    rep.samples.iter().find(|s| s.status != Status::Pass)
                );
            }
        }
    }
}
