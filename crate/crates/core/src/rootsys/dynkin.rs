//! Recognizing the Dynkin type of a root subsystem from its simple roots.

use std::fmt;

use super::{RootId, RootSystem, Series};

/// One connected component of a subsystem's Dynkin diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentType {
    pub series: Series,
    pub rank: usize,
}

impl ComponentType {
    /// Order of the Weyl group of this simple type.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.series {
            Series::A => fact(n + 1),
            Series::B | Series::C => (1u128 << n) * fact(n),
            Series::D => (1u128 << (n - 1)) * fact(n),
            Series::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Series::F => 1_152,
            Series::G => 12,
        }
    }
}

impl fmt::Display for ComponentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

/// Semisimple type of a subsystem plus the dimension of the complementary
/// torus, i.e. the type of a reductive subalgebra of maximal rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubsystemType {
    /// Components sorted by decreasing rank, then series.
    pub components: Vec<ComponentType>,
    pub center_dim: usize,
}

impl SubsystemType {
    /// Classifies the subsystem with the given simple roots inside `rs`.
    pub fn of_simple_system(rs: &RootSystem, simples: &[RootId]) -> SubsystemType {
        let k = simples.len();
        let w: Vec<_> = simples.iter().map(|&s| rs.root(s)).collect();
        let len2: Vec<i64> = w.iter().map(|r| rs.pairing(r, r)).collect();
        // bond[i][j] = a_ij * a_ji
        let mut bond = vec![vec![0i64; k]; k];
        for i in 0..k {
            for j in 0..k {
                if i != j {
                    let p = rs.pairing(w[i], w[j]);
                    bond[i][j] = 4 * p * p / (len2[i] * len2[j]);
                }
            }
        }

        let mut seen = vec![false; k];
        let mut components = Vec::new();
        for start in 0..k {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut at = 0;
            while at < comp.len() {
                let v = comp[at];
                at += 1;
                for u in 0..k {
                    if !seen[u] && bond[v][u] > 0 {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            components.push(classify_component(&comp, &bond, &len2));
        }
        components.sort_by(|a, b| b.rank.cmp(&a.rank).then(a.series.cmp(&b.series)));
        SubsystemType {
            components,
            center_dim: rs.rank() - k,
        }
    }

    pub fn weyl_order(&self) -> u128 {
        self.components
            .iter()
            .map(ComponentType::weyl_order)
            .product()
    }

    pub fn semisimple_rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }
}

impl fmt::Display for SubsystemType {
    /// Renders e.g. `A1xA1`, `D5+T1`, or `T1` for a bare torus.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ss: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        let mut out = ss.join("x");
        if self.center_dim > 0 {
            if !out.is_empty() {
                out.push('+');
            }
            out.push_str(&format!("T{}", self.center_dim));
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

fn classify_component(comp: &[usize], bond: &[Vec<i64>], len2: &[i64]) -> ComponentType {
    let n = comp.len();
    let deg = |v: usize| comp.iter().filter(|&&u| bond[v][u] > 0).count();
    let multi: Vec<(usize, usize)> = comp
        .iter()
        .flat_map(|&a| comp.iter().map(move |&b| (a, b)))
        .filter(|&(a, b)| a < b && bond[a][b] > 1)
        .collect();

    if n == 1 {
        return ComponentType {
            series: Series::A,
            rank: 1,
        };
    }
    if let Some(&(a, b)) = multi.first() {
        if bond[a][b] == 3 {
            return ComponentType {
                series: Series::G,
                rank: 2,
            };
        }
        if n == 2 {
            return ComponentType {
                series: Series::B,
                rank: 2,
            };
        }
        // double bond: F4 if both ends have another neighbour, else B/C by
        // whether the leaf end of the double bond is short
        if deg(a) == 2 && deg(b) == 2 {
            return ComponentType {
                series: Series::F,
                rank: 4,
            };
        }
        let (leaf, other) = if deg(a) == 1 { (a, b) } else { (b, a) };
        let series = if len2[leaf] < len2[other] {
            Series::B
        } else {
            Series::C
        };
        return ComponentType { series, rank: n };
    }
    let branch = comp.iter().copied().find(|&v| deg(v) == 3);
    let Some(branch) = branch else {
        return ComponentType {
            series: Series::A,
            rank: n,
        };
    };
    // arm lengths from the branch node
    let mut arms: Vec<usize> = comp
        .iter()
        .copied()
        .filter(|&u| bond[branch][u] > 0)
        .map(|first| {
            let (mut prev, mut cur, mut len) = (branch, first, 1);
            loop {
                let next = comp
                    .iter()
                    .copied()
                    .find(|&u| u != prev && bond[cur][u] > 0);
                match next {
                    Some(nx) => {
                        prev = cur;
                        cur = nx;
                        len += 1;
                    }
                    None => break len,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match (arms[0], arms[1]) {
        (1, 1) => ComponentType {
            series: Series::D,
            rank: n,
        },
        _ => ComponentType {
            series: Series::E,
            rank: n,
        },
    }
}
