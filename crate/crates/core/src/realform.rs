//! Inner real forms as ℤ/2 gradings of the root system.
//!
//! A marking of Dynkin nodes determines the Cartan involution θ of an
//! equal-rank real form: θ fixes the Cartan subalgebra and acts on the root
//! space of `α` by `(-1)^(sum of marked coefficients of α)`. Roots with
//! eigenvalue +1 are compact (they span 𝔨), the rest are the weights of 𝔰.

use crate::error::{Error, Result};
use crate::linalg;
use crate::rootsys::{RootId, RootSystem, Series, SubsystemType};

/// Compact/noncompact labelling of every root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactnessGrading {
    marked: Vec<usize>,
    noncompact: Vec<bool>,
}

impl CompactnessGrading {
    /// Marked (noncompact) simple nodes, 0-based and sorted.
    pub fn marked(&self) -> &[usize] {
        &self.marked
    }

    pub fn is_noncompact(&self, id: RootId) -> bool {
        self.noncompact[id]
    }

    pub fn is_compact(&self, id: RootId) -> bool {
        !self.noncompact[id]
    }

    /// Positive compact roots, Δ⁺(𝔨).
    pub fn compact_positives(&self, rs: &RootSystem) -> Vec<RootId> {
        (0..rs.num_positive())
            .filter(|&r| self.is_compact(r))
            .collect()
    }

    /// All noncompact roots, the weights of 𝔰.
    pub fn noncompact_roots(&self) -> Vec<RootId> {
        (0..self.noncompact.len())
            .filter(|&r| self.noncompact[r])
            .collect()
    }
}

/// Grades the roots by the parity of their marked coefficients.
pub fn grade_roots(rs: &RootSystem, marked: &[usize]) -> Result<CompactnessGrading> {
    if marked.is_empty() {
        return Err(Error::CompactForm);
    }
    if let Some(&node) = marked.iter().find(|&&m| m >= rs.rank()) {
        return Err(Error::BadNode {
            node,
            rank: rs.rank(),
        });
    }
    let mut marked = marked.to_vec();
    marked.sort_unstable();
    marked.dedup();
    let noncompact = rs
        .roots()
        .iter()
        .map(|w| marked.iter().map(|&m| w.0[m]).sum::<i32>().rem_euclid(2) == 1)
        .collect();
    Ok(CompactnessGrading { marked, noncompact })
}

/// The structure of 𝔨 and, in the Hermitian case, the splitting 𝔰 = 𝔰₊ ⊕ 𝔰₋.
#[derive(Debug, Clone)]
pub struct HermitianData {
    /// Dimension of the center of 𝔨 (0 or 1).
    pub center_dim: usize,
    /// Central functional ξ as its values on the simple roots, when
    /// `center_dim == 1`; positive on the lowest marked simple root.
    pub xi: Option<Vec<i64>>,
    pub s_plus: Vec<RootId>,
    pub s_minus: Vec<RootId>,
    /// Noncompact roots that stay maximal under adding positive compact
    /// roots: the highest weights of the irreducible summands of 𝔰.
    pub lambda_max_s: Vec<RootId>,
    /// Simple system of Δ⁺(𝔨).
    pub k_simples: Vec<RootId>,
    pub k_type: SubsystemType,
}

impl HermitianData {
    pub fn is_hermitian(&self) -> bool {
        self.center_dim == 1
    }

    /// Highest weight of 𝔰₊ (Hermitian case only).
    pub fn lambda_plus(&self) -> Option<RootId> {
        self.highest_in(&self.s_plus)
    }

    /// Highest weight of 𝔰₋ (Hermitian case only).
    pub fn lambda_minus(&self) -> Option<RootId> {
        self.highest_in(&self.s_minus)
    }

    fn highest_in(&self, part: &[RootId]) -> Option<RootId> {
        if !self.is_hermitian() {
            return None;
        }
        let found: Vec<RootId> = self
            .lambda_max_s
            .iter()
            .copied()
            .filter(|r| part.contains(r))
            .collect();
        (found.len() == 1).then(|| found[0])
    }
}

/// Splits 𝔰 by the center of 𝔨 and finds its maximal weights.
pub fn hermitian_data(rs: &RootSystem, grading: &CompactnessGrading) -> Result<HermitianData> {
    let n = rs.rank();
    let k_pos = grading.compact_positives(rs);
    let rows: Vec<Vec<i64>> = k_pos
        .iter()
        .map(|&r| rs.root(r).0.iter().map(|&c| c as i64).collect())
        .collect();
    let span = linalg::rank(&rows, n);
    let center_dim = n - span;
    if center_dim > 1 {
        return Err(Error::Degenerate(format!(
            "compact roots span rank {span} of {n}"
        )));
    }
    let k_simples = rs.simple_system(&k_pos)?;
    let k_type = SubsystemType::of_simple_system(rs, &k_simples);
    if k_type.center_dim != center_dim {
        return Err(Error::InternalInconsistency(format!(
            "compact simple system has {} roots but span rank is {span}",
            k_simples.len()
        )));
    }

    let noncompact = grading.noncompact_roots();
    let lambda_max_s: Vec<RootId> = noncompact
        .iter()
        .copied()
        .filter(|&a| {
            k_pos
                .iter()
                .all(|&g| rs.sum_root(a, g).is_none_or(|s| grading.is_compact(s)))
        })
        .collect();

    let (xi, s_plus, s_minus) = if center_dim == 1 {
        let mut xi = linalg::nullspace(&rows, n)
            .pop()
            .expect("one-dimensional kernel");
        let anchor = grading.marked()[0];
        if xi[anchor] == 0 {
            return Err(Error::Degenerate(
                "central functional vanishes on a noncompact simple root".into(),
            ));
        }
        if xi[anchor] < 0 {
            xi.iter_mut().for_each(|x| *x = -*x);
        }
        let value = |r: RootId| -> i64 {
            rs.root(r)
                .0
                .iter()
                .zip(&xi)
                .map(|(&c, &x)| c as i64 * x)
                .sum()
        };
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for &r in &noncompact {
            match value(r).signum() {
                1 => plus.push(r),
                -1 => minus.push(r),
                _ => {
                    return Err(Error::Degenerate(
                        "noncompact root annihilated by the center of k".into(),
                    ))
                }
            }
        }
        (Some(xi), plus, minus)
    } else {
        (None, Vec::new(), Vec::new())
    };

    Ok(HermitianData {
        center_dim,
        xi,
        s_plus,
        s_minus,
        lambda_max_s,
        k_simples,
        k_type,
    })
}

/// Best-effort name of the real form; falls back to `type(k-type)`.
pub fn identify_real_form(
    rs: &RootSystem,
    grading: &CompactnessGrading,
    hermitian: &HermitianData,
) -> String {
    let d = rs.dynkin();
    let n = d.rank();
    let m: Vec<bool> = (0..n).map(|i| grading.marked().contains(&i)).collect();
    // Signs x_i = ±1 of θ on the vector representation, determined up to a
    // global sign by x_i / x_{i+1} = (-1)^{m_i} along the ε_i − ε_{i+1} chain.
    let chain = |len: usize| -> Vec<bool> {
        let mut neg = vec![false; len];
        for i in 1..len {
            neg[i] = neg[i - 1] ^ m[i - 1];
        }
        neg
    };
    let k = hermitian.k_type.to_string();
    match d.series() {
        Series::A => {
            let neg = chain(n + 1);
            let q = neg.iter().filter(|&&b| b).count();
            let p = n + 1 - q;
            format!("su({},{})", p.max(q), p.min(q))
        }
        Series::B => {
            // x_n = (-1)^{m_n}; the zero weight contributes a +1 eigenvalue
            let mut neg = vec![false; n];
            neg[n - 1] = m[n - 1];
            for i in (0..n - 1).rev() {
                neg[i] = neg[i + 1] ^ m[i];
            }
            let p = neg.iter().filter(|&&b| b).count();
            format!("so({},{})", 2 * p, 2 * (n - p) + 1)
        }
        Series::C => {
            if m[n - 1] {
                format!("sp({n},ℝ)")
            } else {
                let neg = chain(n);
                let q = neg.iter().filter(|&&b| b).count();
                let p = n - q;
                format!("sp({},{})", p.max(q), p.min(q))
            }
        }
        Series::D => {
            if m[n - 2] ^ m[n - 1] {
                format!("so*({})", 2 * n)
            } else {
                let neg = chain(n);
                let q = neg.iter().filter(|&&b| b).count();
                let p = n - q;
                format!("so({},{})", 2 * p.min(q), 2 * p.max(q))
            }
        }
        Series::E | Series::F | Series::G => {
            let known = match (d.to_string().as_str(), k.as_str()) {
                ("G2", "A1xA1") => Some("g2(2) (split)"),
                ("F4", "C3xA1") => Some("f4(4) (split)"),
                ("F4", "B4") => Some("f4(-20)"),
                ("E6", "A5xA1") => Some("e6(2)"),
                ("E6", "D5+T1") => Some("e6(-14)"),
                ("E7", "A7") => Some("e7(7) (split)"),
                ("E7", "D6xA1") => Some("e7(-5)"),
                ("E7", "E6+T1") => Some("e7(-25)"),
                ("E8", "D8") => Some("e8(8) (split)"),
                ("E8", "E7xA1") => Some("e8(-24)"),
                _ => None,
            };
            known.map_or_else(|| format!("{d}({k})"), str::to_string)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{DynkinType, Weight};

    fn setup(t: &str, marked: &[usize]) -> (RootSystem, CompactnessGrading) {
        let rs = RootSystem::new(t.parse::<DynkinType>().unwrap());
        let g = grade_roots(&rs, marked).unwrap();
        (rs, g)
    }

    fn ids(rs: &RootSystem, ws: &[&[i32]]) -> Vec<RootId> {
        let mut v: Vec<RootId> = ws
            .iter()
            .map(|w| rs.root_id(&Weight(w.to_vec())).unwrap())
            .collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn grading_examples() {
        let (rs, g) = setup("A2", &[0]);
        assert_eq!(
            g.noncompact_roots(),
            ids(&rs, &[&[1, 0], &[1, 1], &[-1, 0], &[-1, -1]])
        );
        assert_eq!(g.compact_positives(&rs), ids(&rs, &[&[0, 1]]));

        let (rs, g) = setup("B2", &[1]);
        assert_eq!(
            g.noncompact_roots(),
            ids(&rs, &[&[0, 1], &[1, 1], &[0, -1], &[-1, -1]])
        );
        assert_eq!(g.compact_positives(&rs), ids(&rs, &[&[1, 0], &[1, 2]]));

        let (rs, g) = setup("G2", &[0]);
        assert_eq!(g.noncompact_roots().len(), 8);
        let h = hermitian_data(&rs, &g).unwrap();
        assert_eq!(h.k_type.to_string(), "A1xA1");
    }

    #[test]
    fn grading_errors() {
        let rs = RootSystem::new("A2".parse().unwrap());
        assert_eq!(grade_roots(&rs, &[]), Err(Error::CompactForm));
        assert_eq!(
            grade_roots(&rs, &[2]),
            Err(Error::BadNode { node: 2, rank: 2 })
        );
    }

    #[test]
    fn hermitian_su21() {
        let (rs, g) = setup("A2", &[0]);
        let h = hermitian_data(&rs, &g).unwrap();
        assert_eq!(h.center_dim, 1);
        assert_eq!(h.s_plus, ids(&rs, &[&[1, 0], &[1, 1]]));
        assert_eq!(h.s_minus, ids(&rs, &[&[-1, 0], &[-1, -1]]));
        assert_eq!(h.lambda_plus(), rs.root_id(&Weight(vec![1, 1])));
        assert_eq!(h.lambda_minus(), rs.root_id(&Weight(vec![-1, 0])));
        assert_eq!(identify_real_form(&rs, &g, &h), "su(2,1)");
    }

    #[test]
    fn b2_markings() {
        let (rs, g) = setup("B2", &[1]);
        let h = hermitian_data(&rs, &g).unwrap();
        assert_eq!(h.center_dim, 0);
        assert_eq!(h.lambda_max_s, ids(&rs, &[&[1, 1]]));
        assert_eq!(identify_real_form(&rs, &g, &h), "so(4,1)");

        let (rs, g) = setup("B2", &[0]);
        let h = hermitian_data(&rs, &g).unwrap();
        assert_eq!(h.center_dim, 1);
        assert_eq!(identify_real_form(&rs, &g, &h), "so(2,3)");
    }

    #[test]
    fn two_marked_nodes_split_by_lowest() {
        // A2 with both nodes marked: 𝔨 = u(1)+su(2) on α1+α2, and the
        // normalization puts α1 in 𝔰₊ and α2 in 𝔰₋
        let (rs, g) = setup("A2", &[0, 1]);
        let h = hermitian_data(&rs, &g).unwrap();
        assert_eq!(h.center_dim, 1);
        assert_eq!(h.s_plus, ids(&rs, &[&[1, 0], &[0, -1]]));
        assert_eq!(identify_real_form(&rs, &g, &h), "su(2,1)");
    }

    #[test]
    fn names() {
        let name = |t: &str, m: &[usize]| {
            let (rs, g) = setup(t, m);
            let h = hermitian_data(&rs, &g).unwrap();
            identify_real_form(&rs, &g, &h)
        };
        assert_eq!(name("G2", &[0]), "g2(2) (split)");
        assert_eq!(name("G2", &[1]), "g2(2) (split)");
        assert_eq!(name("A3", &[1]), "su(2,2)");
        assert_eq!(name("A3", &[0, 2]), "su(2,2)");
        assert_eq!(name("C3", &[2]), "sp(3,ℝ)");
        assert_eq!(name("C3", &[0]), "sp(2,1)");
        assert_eq!(name("D4", &[0]), "so(2,6)");
        assert_eq!(name("D4", &[1]), "so(4,4)");
        assert_eq!(name("D4", &[3]), "so*(8)");
        assert_eq!(name("B3", &[2]), "so(6,1)");
        assert_eq!(name("F4", &[0]), "f4(4) (split)");
        assert_eq!(name("F4", &[3]), "f4(-20)");
        assert_eq!(name("E6", &[0]), "e6(-14)");
        assert_eq!(name("E6", &[1]), "e6(2)");
    }
}
