use super::{CartanType, Series};

/// A bond of a Dynkin diagram. Multiplicity 4 marks the doubled bond of
/// the extended `A_1` diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bond {
    pub a: usize,
    pub b: usize,
    pub multiplicity: u8,
}

/// Dynkin diagram with nodes carrying squared root lengths
/// (1 = short; 2 or 3 = long).
///
/// Extended diagrams put the affine node at index 0 and the simple roots at
/// `1..=rank` in Bourbaki order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    lengths: Vec<u8>,
    bonds: Vec<Bond>,
}

impl Diagram {
    fn new(lengths: Vec<u8>) -> Self {
        Self {
            lengths,
            bonds: Vec::new(),
        }
    }

    fn bond(&mut self, a: usize, b: usize, multiplicity: u8) {
        self.bonds.push(Bond { a, b, multiplicity });
    }

    fn chain(&mut self, from: usize, to: usize) {
        for i in from..to {
            self.bond(i, i + 1, 1);
        }
    }

    pub fn extended(t: CartanType) -> Self {
        let n = t.rank() as usize;
        match t.series() {
            Series::Torus => Self::new(Vec::new()),
            Series::A => {
                let mut d = Self::new(vec![1; n + 1]);
                if n == 1 {
                    d.bond(0, 1, 4);
                } else {
                    d.chain(0, n);
                    d.bond(n, 0, 1);
                }
                d
            }
            Series::B if n == 2 => {
                let mut d = Self::new(vec![2, 2, 1]);
                d.bond(0, 2, 2);
                d.bond(1, 2, 2);
                d
            }
            Series::B => {
                let mut lengths = vec![2; n + 1];
                lengths[n] = 1;
                let mut d = Self::new(lengths);
                d.bond(0, 2, 1);
                d.chain(1, n - 1);
                d.bond(n - 1, n, 2);
                d
            }
            Series::C => {
                let mut lengths = vec![1; n + 1];
                lengths[0] = 2;
                lengths[n] = 2;
                let mut d = Self::new(lengths);
                d.bond(0, 1, 2);
                d.chain(1, n - 1);
                d.bond(n - 1, n, 2);
                d
            }
            Series::D => {
                let mut d = Self::new(vec![1; n + 1]);
                d.bond(0, 2, 1);
                d.chain(1, n - 1);
                d.bond(n - 2, n, 1);
                d
            }
            Series::E => {
                let mut d = Self::new(vec![1; n + 1]);
                d.bond(1, 3, 1);
                d.chain(3, n);
                d.bond(2, 4, 1);
                match n {
                    6 => d.bond(0, 2, 1),
                    7 => d.bond(0, 1, 1),
                    _ => d.bond(0, 8, 1),
                }
                d
            }
            Series::F => {
                let mut d = Self::new(vec![2, 2, 2, 1, 1]);
                d.bond(0, 1, 1);
                d.bond(1, 2, 1);
                d.bond(2, 3, 2);
                d.bond(3, 4, 1);
                d
            }
            Series::G => {
                let mut d = Self::new(vec![3, 1, 3]);
                d.bond(0, 2, 1);
                d.bond(1, 2, 3);
                d
            }
        }
    }

    pub fn node_count(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    pub fn lengths(&self) -> &[u8] {
        &self.lengths
    }

    pub fn bonds(&self) -> &[Bond] {
        &self.bonds
    }

    /// Generalized Cartan matrix `a_ij = 2(α_i, α_j) / (α_i, α_i)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.node_count();
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        for bond in &self.bonds {
            let (la, lb) = (
                i64::from(self.lengths[bond.a]),
                i64::from(self.lengths[bond.b]),
            );
            if bond.multiplicity == 4 {
                m[bond.a][bond.b] = -2;
                m[bond.b][bond.a] = -2;
                continue;
            }
            let long = la.max(lb);
            m[bond.a][bond.b] = -long / la;
            m[bond.b][bond.a] = -long / lb;
        }
        m
    }

    fn neighbours(&self, v: usize, alive: &[bool]) -> impl Iterator<Item = (usize, u8)> + '_ {
        let alive = alive.to_vec();
        self.bonds.iter().filter_map(move |b| {
            let other = if b.a == v {
                b.b
            } else if b.b == v {
                b.a
            } else {
                return None;
            };
            alive[other].then_some((other, b.multiplicity))
        })
    }

    /// Types of the connected components spanned by the nodes flagged in `alive`.
    pub(crate) fn component_types(&self, alive: &[bool]) -> Vec<CartanType> {
        let n = self.node_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if !alive[start] || seen[start] {
                continue;
            }
            let mut component = vec![start];
            seen[start] = true;
            let mut i = 0;
            while i < component.len() {
                let v = component[i];
                for (w, _) in self.neighbours(v, alive) {
                    if !seen[w] {
                        seen[w] = true;
                        component.push(w);
                    }
                }
                i += 1;
            }
            out.push(self.classify(&component, alive));
        }
        out
    }

    /// Identifies a connected finite-type subdiagram.
    fn classify(&self, nodes: &[usize], alive: &[bool]) -> CartanType {
        let n = nodes.len() as u32;
        if n == 1 {
            return CartanType::unchecked(Series::A, 1);
        }
        let mut internal: Vec<Bond> = self
            .bonds
            .iter()
            .filter(|b| alive[b.a] && alive[b.b] && nodes.contains(&b.a))
            .copied()
            .collect();
        internal.sort_by_key(|b| (b.a, b.b));
        let degree = |v: usize| internal.iter().filter(|b| b.a == v || b.b == v).count();
        assert!(
            internal.iter().all(|b| b.multiplicity < 4),
            "affine A1 diagram is not of finite type"
        );

        if internal.iter().any(|b| b.multiplicity == 3) {
            return CartanType::unchecked(Series::G, 2);
        }
        if let Some(double) = internal.iter().find(|b| b.multiplicity == 2) {
            if n == 2 {
                return CartanType::unchecked(Series::B, 2);
            }
            let (long, short) = if self.lengths[double.a] > self.lengths[double.b] {
                (double.a, double.b)
            } else {
                (double.b, double.a)
            };
            return if degree(long) == 1 {
                CartanType::unchecked(Series::C, n)
            } else if degree(short) == 1 {
                CartanType::unchecked(Series::B, n)
            } else {
                CartanType::unchecked(Series::F, 4)
            };
        }

        let branch = nodes.iter().copied().find(|&v| degree(v) >= 3);
        let Some(branch) = branch else {
            return CartanType::unchecked(Series::A, n);
        };
        let mut arms: Vec<u32> = Vec::new();
        for first in internal.iter().filter_map(|b| {
            if b.a == branch {
                Some(b.b)
            } else if b.b == branch {
                Some(b.a)
            } else {
                None
            }
        }) {
            let (mut prev, mut cur, mut len) = (branch, first, 1);
            loop {
                let next = internal.iter().find_map(|b| {
                    if b.a == cur && b.b != prev {
                        Some(b.b)
                    } else if b.b == cur && b.a != prev {
                        Some(b.a)
                    } else {
                        None
                    }
                });
                match next {
                    Some(nx) => {
                        prev = cur;
                        cur = nx;
                        len += 1;
                    }
                    None => break,
                }
            }
            arms.push(len);
        }
        arms.sort_unstable();
        match arms.as_slice() {
            [1, 1, _] => CartanType::unchecked(Series::D, n),
            [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => CartanType::unchecked(Series::E, n),
            other => panic!("subdiagram with arms {other:?} is not of finite type"),
        }
    }
}
