#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use sigmakit::chars::{make_character, parse_character, Character};
use sigmakit::exactlin::{rational_kernel, FormalBasis, FormalReal, IntMatrix};
use sigmakit::groups::parse::parse_group;
use sigmakit::groups::{Element, FinByAbelianGroup, FiniteGroupTable, GroupInstance, SubgroupDescriptor};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("fixtures")
        .join(name)
}

pub fn load_group(name: &str) -> GroupInstance {
    parse_group(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap()
}

pub fn load_char(g: &GroupInstance, name: &str) -> (FormalBasis, Character) {
    parse_character(g, &std::fs::read_to_string(fixture(name)).unwrap()).unwrap()
}

/// Character with the listed values and zero elsewhere.
pub fn character(g: &GroupInstance, pairs: &[(&str, FormalReal)]) -> Character {
    let map: BTreeMap<String, FormalReal> = g
        .generator_names()
        .into_iter()
        .map(|n| {
            let v = pairs
                .iter()
                .find(|(k, _)| *k == n)
                .map(|(_, v)| v.clone())
                .unwrap_or_else(FormalReal::zero);
            (n, v)
        })
        .collect();
    make_character(g, &map).unwrap()
}

type Matrix = Vec<Vec<i64>>;

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

fn sign(rng: &mut ChaCha8Rng) -> i64 {
    if rng.gen_bool(0.5) {
        1
    } else {
        -1
    }
}

/// Signed permutation of order at most two, plus the swapped pairs.
fn involution(rng: &mut ChaCha8Rng, n: usize) -> (Matrix, Vec<(usize, usize)>) {
    let mut m = vec![vec![0; n]; n];
    let mut pairs = Vec::new();
    let mut i = 0;
    while i < n {
        if i + 1 < n && rng.gen_bool(0.5) {
            let s = sign(rng);
            m[i][i + 1] = s;
            m[i + 1][i] = s;
            pairs.push((i, i + 1));
            i += 2;
        } else {
            m[i][i] = sign(rng);
            i += 1;
        }
    }
    (m, pairs)
}

fn block(n: usize, at: usize, b: [[i64; 2]; 2]) -> Matrix {
    let mut m = identity(n);
    for r in 0..2 {
        for c in 0..2 {
            m[at + r][at + c] = b[r][c];
        }
    }
    m
}

fn cyclic_action(gen: &Matrix, order: usize) -> Vec<Matrix> {
    let mut out = vec![identity(gen.len())];
    for _ in 1..order {
        out.push(mat_mul(out.last().unwrap(), gen));
    }
    out
}

/// A random `K ⋉ ℤⁿ` with `|K| ≤ 4` and `n ≤ 4`.
pub fn random_group(rng: &mut ChaCha8Rng) -> FinByAbelianGroup {
    let n = rng.gen_range(1..=4usize);
    let choice = rng.gen_range(0..5);
    let (k, action) = match choice {
        1 | 2 if n >= 2 => {
            let at = rng.gen_range(0..n - 1);
            if choice == 1 {
                let m = block(n, at, [[0, -1], [1, -1]]);
                (FiniteGroupTable::cyclic(3, "k"), cyclic_action(&m, 3))
            } else {
                let mut m = block(n, at, [[0, -1], [1, 0]]);
                for i in (0..n).filter(|&i| i != at && i != at + 1) {
                    m[i][i] = sign(rng);
                }
                (FiniteGroupTable::cyclic(4, "k"), cyclic_action(&m, 4))
            }
        }
        3 => {
            let (x, pairs) = involution(rng, n);
            let mut y = identity(n);
            let mut i = 0;
            while i < n {
                let s = sign(rng);
                y[i][i] = s;
                if pairs.contains(&(i, i + 1)) {
                    y[i + 1][i + 1] = s;
                    i += 1;
                }
                i += 1;
            }
            let xy = mat_mul(&x, &y);
            (FiniteGroupTable::klein(), vec![identity(n), x, y, xy])
        }
        4 => (FiniteGroupTable::trivial(), vec![identity(n)]),
        _ => {
            let (m, _) = involution(rng, n);
            (FiniteGroupTable::cyclic(2, "k"), cyclic_action(&m, 2))
        }
    };
    FinByAbelianGroup::new(k, n, action, None).expect("valid random action")
}

/// Integer basis of the translation characters fixed by every `M_k`.
pub fn fixed_characters(g: &FinByAbelianGroup) -> Vec<Vec<BigInt>> {
    let n = g.rank();
    let mut rows = Vec::new();
    for k in 0..g.k().order() {
        let m = g.matrix(k);
        for j in 0..n {
            rows.push((0..n).map(|i| m[i][j] - i64::from(i == j)).collect::<Vec<i64>>());
        }
    }
    rational_kernel(&IntMatrix::from_rows(n, &rows))
}

pub struct RandomInstance {
    pub group: GroupInstance,
    pub chi: Character,
    pub dense: bool,
    pub k: SubgroupDescriptor,
    pub h: SubgroupDescriptor,
    pub height: i64,
    pub norm: i64,
}

fn descriptor(g: &FinByAbelianGroup, q: &sigmakit::groups::AffineSubgroup, tag: &str) -> SubgroupDescriptor {
    SubgroupDescriptor::new(g.subgroup_generators(q).into_iter().map(Element::Affine).collect(), tag)
}

/// Random instance with a nonzero character; dense characters mix in `α`.
pub fn random_instance(rng: &mut ChaCha8Rng) -> RandomInstance {
    loop {
        let g = random_group(rng);
        let fixed = fixed_characters(&g);
        if fixed.is_empty() {
            continue;
        }
        let dense = fixed.len() >= 2 && rng.gen_bool(0.5);
        let int = |x: &BigInt| FormalReal::rational(BigRational::from_integer(x.clone()));
        let values: Vec<FormalReal> = if dense {
            let (a, b) = (rng.gen_range(0..fixed.len()), rng.gen_range(1..fixed.len()));
            let b = (a + b) % fixed.len();
            (0..g.rank())
                .map(|j| {
                    &int(&fixed[a][j]) + &FormalReal::symbol(1).scale(&BigRational::from_integer(fixed[b][j].clone()))
                })
                .collect()
        } else {
            let coeffs: Vec<i64> = fixed.iter().map(|_| rng.gen_range(-2..=2)).collect();
            if coeffs.iter().all(|&c| c == 0) {
                continue;
            }
            (0..g.rank())
                .map(|j| {
                    let s: BigInt = fixed.iter().zip(&coeffs).map(|(w, &c)| &w[j] * c).sum();
                    int(&s)
                })
                .collect()
        };
        if values.iter().all(FormalReal::is_zero) {
            continue;
        }
        let inst = GroupInstance::FinByAb(g.clone());
        let names = g.basis_names().to_vec();
        let pairs: Vec<(&str, FormalReal)> = names.iter().map(String::as_str).zip(values).collect();
        let chi = character(&inst, &pairs);
        let classes = g.finite_subgroup_classes(1).classes;
        let kq = classes[rng.gen_range(0..classes.len())].clone();
        let hq = if rng.gen_bool(0.3) {
            let mut v = vec![0; g.rank()];
            v[rng.gen_range(0..g.rank())] = 1;
            g.conjugate_subgroup(&g.inv(&g.translation(v)), &kq)
        } else {
            let bigger: Vec<_> = classes.iter().filter(|c| c.order() >= kq.order()).collect();
            bigger[rng.gen_range(0..bigger.len())].clone()
        };
        let norm = if g.rank() <= 2 { 3 } else { 2 };
        return RandomInstance {
            k: descriptor(&g, &kq, "K"),
            h: descriptor(&g, &hq, "H"),
            group: inst,
            chi,
            dense,
            height: rng.gen_range(1..=8),
            norm,
        };
    }
}
