//! Independent oracles shared by the integration tests. None of them call
//! into the library except to convert their results into its types.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::hash::Hash;

use unipotent_strata::cartan::{CartanType, Series, SubsystemType};
use unipotent_strata::groups::FiniteGroupLabel;

/// Order and number of conjugacy classes of the group whose elements are
/// `elements`, closed under `mul`.
pub fn class_count<T: Clone + Eq + Hash>(
    elements: &[T],
    mul: impl Fn(&T, &T) -> T,
) -> (usize, usize) {
    let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let identity = elements
        .iter()
        .find(|e| elements.iter().all(|x| mul(e, x) == *x))
        .expect("identity");
    let inverse = |x: &T| -> T {
        elements
            .iter()
            .find(|y| mul(x, y) == *identity)
            .expect("inverse")
            .clone()
    };
    let inverses: Vec<T> = elements.iter().map(inverse).collect();
    let mut seen = vec![false; elements.len()];
    let mut classes = 0;
    for (i, x) in elements.iter().enumerate() {
        if seen[i] {
            continue;
        }
        classes += 1;
        for (g, gi) in elements.iter().zip(&inverses) {
            seen[index[&mul(&mul(g, x), gi)]] = true;
        }
    }
    (elements.len(), classes)
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

// signature fixed by `class_count`, whose elements are `Vec`s
#[allow(clippy::ptr_arg)]
fn perm_mul(a: &Vec<usize>, b: &Vec<usize>) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

/// `(order, classes)` for a component-group tag, from explicit element
/// lists: symmetric groups as all permutations, cyclic groups as residues,
/// products as pairs and `D8` as signed 2x2 permutation matrices.
pub fn group_oracle(g: FiniteGroupLabel) -> (usize, usize) {
    use FiniteGroupLabel::*;
    let cyclic = |m: u32| -> (usize, usize) {
        let elems: Vec<u32> = (0..m).collect();
        class_count(&elems, |a, b| (a + b) % m)
    };
    let symmetric = |n: usize| class_count(&all_perms(n), perm_mul);
    match g {
        Triv => cyclic(1),
        C2 => cyclic(2),
        C3 => cyclic(3),
        C4 => cyclic(4),
        C5 => cyclic(5),
        C6 => cyclic(6),
        C2xC2 => {
            let elems: Vec<(u32, u32)> = (0..2).flat_map(|a| (0..2).map(move |b| (a, b))).collect();
            class_count(&elems, |x, y| ((x.0 + y.0) % 2, (x.1 + y.1) % 2))
        }
        C2xC3 => {
            let elems: Vec<(u32, u32)> = (0..2).flat_map(|a| (0..3).map(move |b| (a, b))).collect();
            class_count(&elems, |x, y| ((x.0 + y.0) % 2, (x.1 + y.1) % 3))
        }
        S3 => symmetric(3),
        S4 => symmetric(4),
        S5 => symmetric(5),
        D8 => {
            let mut elems = Vec::new();
            for swap in [false, true] {
                for s0 in [1i32, -1] {
                    for s1 in [1i32, -1] {
                        elems.push(if swap {
                            [[0, s0], [s1, 0]]
                        } else {
                            [[s0, 0], [0, s1]]
                        });
                    }
                }
            }
            class_count(&elems, |a, b| {
                let mut c = [[0; 2]; 2];
                for i in 0..2 {
                    for j in 0..2 {
                        c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
                    }
                }
                c
            })
        }
        S3xC2 => {
            let elems: Vec<(Vec<usize>, u32)> = all_perms(3)
                .into_iter()
                .flat_map(|p| (0..2).map(move |c| (p.clone(), c)))
                .collect();
            class_count(&elems, |x, y| (perm_mul(&x.0, &y.0), (x.1 + y.1) % 2))
        }
    }
}

/// Cartan matrices, written out by hand, for the reflection-group oracle.
pub fn cartan_matrix(t: CartanType) -> Vec<Vec<i64>> {
    let from_rows = |rows: &[&[i64]]| rows.iter().map(|r| r.to_vec()).collect();
    match (t.series(), t.rank()) {
        (Series::G, 2) => from_rows(&[&[2, -1], &[-3, 2]]),
        (Series::F, 4) => from_rows(&[
            &[2, -1, 0, 0],
            &[-1, 2, -2, 0],
            &[0, -1, 2, -1],
            &[0, 0, -1, 2],
        ]),
        (Series::E, 6) => from_rows(&[
            &[2, 0, -1, 0, 0, 0],
            &[0, 2, 0, -1, 0, 0],
            &[-1, 0, 2, -1, 0, 0],
            &[0, -1, -1, 2, -1, 0],
            &[0, 0, 0, -1, 2, -1],
            &[0, 0, 0, 0, -1, 2],
        ]),
        other => panic!("no hand-written Cartan matrix for {other:?}"),
    }
}

type Mat = Vec<i8>;

fn mat_mul(n: usize, a: &Mat, b: &Mat) -> Mat {
    let mut c = vec![0i8; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x != 0 {
                for j in 0..n {
                    c[i * n + j] += x * b[k * n + j];
                }
            }
        }
    }
    c
}

/// `(|W|, number of conjugacy classes of W)` for the Weyl group with Cartan
/// matrix `a`, by generating all elements as integer matrices and taking
/// orbits under conjugation by simple reflections.
pub fn reflection_group_classes(a: &[Vec<i64>]) -> (usize, usize) {
    let n = a.len();
    let gens: Vec<Mat> = (0..n)
        .map(|i| {
            let mut m = vec![0i8; n * n];
            for j in 0..n {
                m[j * n + j] = 1;
                // s_i(α_j) = α_j - a_ij α_i
                m[i * n + j] -= a[i][j] as i8;
            }
            m
        })
        .collect();
    let mut identity = vec![0i8; n * n];
    for i in 0..n {
        identity[i * n + i] = 1;
    }
    let mut elements: HashSet<Mat> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for s in &gens {
            let y = mat_mul(n, s, &x);
            if elements.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let order = elements.len();
    let mut unseen = elements;
    let mut classes = 0;
    while let Some(start) = unseen.iter().next().cloned() {
        classes += 1;
        unseen.remove(&start);
        let mut queue = vec![start];
        while let Some(x) = queue.pop() {
            for s in &gens {
                // simple reflections are involutions
                let y = mat_mul(n, &mat_mul(n, s, &x), s);
                if unseen.remove(&y) {
                    queue.push(y);
                }
            }
        }
    }
    (order, classes)
}

/// `(|W|, classes)` for the hyperoctahedral group of rank `n`, or its
/// index-two subgroup with an even number of sign changes.
pub fn signed_permutation_classes(n: usize, even_only: bool) -> (usize, usize) {
    let mut elements = Vec::new();
    for p in all_perms(n) {
        for signs in 0u32..(1 << n) {
            if even_only && signs.count_ones() % 2 == 1 {
                continue;
            }
            let e: Vec<(usize, bool)> = (0..n).map(|i| (p[i], signs >> i & 1 == 1)).collect();
            elements.push(e);
        }
    }
    let mul = |a: &Vec<(usize, bool)>, b: &Vec<(usize, bool)>| -> Vec<(usize, bool)> {
        b.iter().map(|&(i, s)| (a[i].0, a[i].1 ^ s)).collect()
    };
    class_count(&elements, mul)
}

/// Partitions of `n` with parts at most `max`, by plain recursion.
pub fn brute_partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in brute_partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Ordered pairs of partitions of total size `n`.
pub fn brute_bipartitions(n: u32) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut out = Vec::new();
    for a in 0..=n {
        for alpha in brute_partitions(a, a) {
            for beta in brute_partitions(n - a, n - a) {
                out.push((alpha.clone(), beta));
            }
        }
    }
    out
}

/// `|Irr(W(D_n))|`: unordered pairs, with each pair `{α, α}` counted twice.
pub fn brute_d_count(n: u32) -> usize {
    let mut unordered: BTreeSet<(Vec<u32>, Vec<u32>)> = BTreeSet::new();
    let mut doubled = 0;
    for (a, b) in brute_bipartitions(n) {
        if a == b {
            doubled += 1;
        } else {
            let key = if a < b { (a, b) } else { (b, a) };
            unordered.insert(key);
        }
    }
    unordered.len() + 2 * doubled
}

/// Extended Dynkin diagram: squared root lengths and bonds with
/// multiplicities, written independently of the library.
pub struct ExtDiagram {
    pub long: Vec<bool>,
    pub bonds: Vec<(usize, usize, u8)>,
}

pub fn extended_diagram(t: CartanType) -> ExtDiagram {
    let n = t.rank() as usize;
    let chain = |from: usize, to: usize| (from..to).map(|i| (i, i + 1, 1u8)).collect::<Vec<_>>();
    match (t.series(), n) {
        (Series::A, 1) => ExtDiagram {
            long: vec![true; 2],
            bonds: vec![(0, 1, 4)],
        },
        (Series::A, _) => {
            let mut bonds = chain(0, n);
            bonds.push((n, 0, 1));
            ExtDiagram {
                long: vec![true; n + 1],
                bonds,
            }
        }
        (Series::B | Series::C, 2) => ExtDiagram {
            long: vec![true, false, true],
            bonds: vec![(0, 1, 2), (1, 2, 2)],
        },
        (Series::B, _) => {
            let mut long = vec![true; n + 1];
            long[n] = false;
            let mut bonds = vec![(0, 2, 1)];
            bonds.extend(chain(1, n - 1));
            bonds.push((n - 1, n, 2));
            ExtDiagram { long, bonds }
        }
        (Series::C, _) => {
            let mut long = vec![false; n + 1];
            long[0] = true;
            long[n] = true;
            let mut bonds = vec![(0, 1, 2)];
            bonds.extend(chain(1, n - 1));
            bonds.push((n - 1, n, 2));
            ExtDiagram { long, bonds }
        }
        (Series::D, _) => {
            let mut bonds = vec![(0, 2, 1)];
            bonds.extend(chain(1, n - 1));
            bonds.push((n - 2, n, 1));
            ExtDiagram {
                long: vec![true; n + 1],
                bonds,
            }
        }
        (Series::E, 6) => ExtDiagram {
            // 1-3-4-5-6 with 2 on 4 and the affine node 0 on 2
            long: vec![true; 7],
            bonds: vec![
                (1, 3, 1),
                (3, 4, 1),
                (4, 5, 1),
                (5, 6, 1),
                (2, 4, 1),
                (0, 2, 1),
            ],
        },
        (Series::E, 7) => ExtDiagram {
            long: vec![true; 8],
            bonds: vec![
                (0, 1, 1),
                (1, 3, 1),
                (3, 4, 1),
                (4, 5, 1),
                (5, 6, 1),
                (6, 7, 1),
                (2, 4, 1),
            ],
        },
        (Series::E, 8) => ExtDiagram {
            long: vec![true; 9],
            bonds: vec![
                (1, 3, 1),
                (3, 4, 1),
                (4, 5, 1),
                (5, 6, 1),
                (6, 7, 1),
                (7, 8, 1),
                (2, 4, 1),
                (8, 0, 1),
            ],
        },
        (Series::F, 4) => ExtDiagram {
            long: vec![true, true, true, false, false],
            bonds: vec![(0, 1, 1), (1, 2, 1), (2, 3, 2), (3, 4, 1)],
        },
        (Series::G, 2) => ExtDiagram {
            long: vec![true, false, true],
            bonds: vec![(0, 2, 1), (1, 2, 3)],
        },
        other => panic!("no extended diagram for {other:?}"),
    }
}

/// Classifies a connected finite-type Dynkin diagram given by the nodes in
/// `nodes`, returning `(series, rank)` in a possibly aliased spelling.
fn classify(d: &ExtDiagram, nodes: &[usize]) -> (Series, u32) {
    let k = nodes.len() as u32;
    let inside: HashSet<usize> = nodes.iter().copied().collect();
    let bonds: Vec<(usize, usize, u8)> = d
        .bonds
        .iter()
        .copied()
        .filter(|(a, b, _)| inside.contains(a) && inside.contains(b))
        .collect();
    if k == 1 {
        return (Series::A, 1);
    }
    if bonds.iter().any(|b| b.2 == 3) {
        return (Series::G, 2);
    }
    if bonds.iter().any(|b| b.2 == 2) {
        let shorts = nodes.iter().filter(|&&v| !d.long[v]).count() as u32;
        if k == 4 && shorts == 2 {
            // B4 and C4 have one and three short roots
            return (Series::F, 4);
        }
        return if shorts == 1 {
            (Series::B, k)
        } else {
            (Series::C, k)
        };
    }
    let degree = |v: usize| bonds.iter().filter(|b| b.0 == v || b.1 == v).count();
    let Some(&branch) = nodes.iter().find(|&&v| degree(v) == 3) else {
        return (Series::A, k);
    };
    let arms: Vec<usize> = bonds
        .iter()
        .filter_map(|b| match b {
            (a, c, _) if *a == branch => Some(*c),
            (a, c, _) if *c == branch => Some(*a),
            _ => None,
        })
        .map(|start| {
            let mut len = 0;
            let (mut prev, mut cur) = (branch, start);
            loop {
                len += 1;
                let next = bonds.iter().find_map(|b| match b {
                    (a, c, _) if *a == cur && *c != prev => Some(*c),
                    (a, c, _) if *c == cur && *a != prev => Some(*a),
                    _ => None,
                });
                match next {
                    Some(n) => (prev, cur) = (cur, n),
                    None => break len,
                }
            }
        })
        .collect();
    if arms.iter().filter(|&&l| l == 1).count() >= 2 {
        (Series::D, k)
    } else {
        (Series::E, k)
    }
}

fn components(d: &ExtDiagram, alive: &[bool]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; alive.len()];
    let mut out = Vec::new();
    for s in 0..alive.len() {
        if !alive[s] || seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            for &(a, b, _) in &d.bonds {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if alive[w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        out.push(comp);
    }
    out
}

/// Types obtained from `t` by deleting a nonempty set of nodes of its
/// extended diagram, enumerating every subset.
pub fn subset_deletions(t: CartanType) -> BTreeSet<SubsystemType> {
    let d = extended_diagram(t);
    let n = d.long.len();
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << n) {
        let alive: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 0).collect();
        let factors = components(&d, &alive).into_iter().map(|c| classify(&d, &c));
        out.insert(SubsystemType::from_raw(factors));
    }
    out
}

/// Closure of `{t}` under replacing one simple factor by a subset deletion
/// of its extended diagram.
pub fn subset_deletion_closure(t: CartanType) -> BTreeSet<SubsystemType> {
    let start = SubsystemType::from_factors([t]);
    let mut seen = BTreeSet::from([start.clone()]);
    let mut work = vec![start];
    while let Some(s) = work.pop() {
        for (i, f) in s.factors().iter().enumerate() {
            for replacement in subset_deletions(*f) {
                let mut rest: Vec<CartanType> = s.factors().to_vec();
                rest.remove(i);
                rest.extend_from_slice(replacement.factors());
                let next = SubsystemType::from_factors(rest);
                if seen.insert(next.clone()) {
                    work.push(next);
                }
            }
        }
    }
    seen
}

/// Pseudo-Levi types of `A_n`: one factor `A_{p-1}` per part `p` of a
/// partition of `n + 1`.
pub fn type_a_pseudo_levis(n: u32) -> BTreeSet<SubsystemType> {
    brute_partitions(n + 1, n + 1)
        .into_iter()
        .map(|p| SubsystemType::from_raw(p.into_iter().map(|part| (Series::A, part - 1))))
        .collect()
}

/// Euler's totient by counting coprime residues.
pub fn totient(m: u32) -> u32 {
    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    (1..=m).filter(|&k| gcd(k, m) == 1).count() as u32
}

/// Characters of `W(G2)` with their degrees.
pub const G2_DEGREES: [(&str, u32); 6] = [
    ("1", 1),
    ("eps", 1),
    ("eps_l", 1),
    ("eps_c", 1),
    ("theta'", 2),
    ("theta''", 2),
];
