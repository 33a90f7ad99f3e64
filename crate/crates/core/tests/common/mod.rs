#![allow(dead_code)]

use std::path::PathBuf;

use disrank::aaf::{parse_apx, ArgFramework};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

pub fn load_apx(name: &str) -> ArgFramework {
    let text = std::fs::read_to_string(data_path(name)).expect("fixture readable");
    parse_apx(&text).expect("fixture parses")
}

pub fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

/// Erdős–Rényi style digraph on `n` vertices, self-loops allowed.
pub fn random_digraph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> ArgFramework {
    let vs = names(n);
    let mut af = ArgFramework::new();
    for v in &vs {
        af.add_argument(v).unwrap();
    }
    for a in &vs {
        for b in &vs {
            if rng.gen_bool(p) {
                af.add_attack(a, b).unwrap();
            }
        }
    }
    af
}

/// Random DAG: edges only go from lower to higher index, no self-loops.
pub fn random_dag(rng: &mut ChaCha8Rng, n: usize, p: f64) -> ArgFramework {
    let vs = names(n);
    let mut af = ArgFramework::new();
    for v in &vs {
        af.add_argument(v).unwrap();
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                af.add_attack(&vs[i], &vs[j]).unwrap();
            }
        }
    }
    af
}

/// Adjacency lists of in-neighbours, read straight off the attack list.
pub fn incoming(f: &ArgFramework) -> Vec<Vec<usize>> {
    let mut inc = vec![Vec::new(); f.len()];
    for (a, b) in f.attack_indices() {
        inc[b].push(a);
    }
    inc
}

/// Number of walks of length `len` ending in `v`, by explicit DFS over
/// predecessor choices.
pub fn brute_walk_count(inc: &[Vec<usize>], v: usize, len: usize) -> u128 {
    if len == 0 {
        return 1;
    }
    inc[v]
        .iter()
        .map(|&u| brute_walk_count(inc, u, len - 1))
        .sum()
}

/// Walk counts by plain integer matrix powering: column sums of Mⁱ.
pub fn int_matrix_counts(f: &ArgFramework, up_to: usize) -> Vec<Vec<i128>> {
    let n = f.len();
    let mut m = vec![vec![0i128; n]; n];
    for (a, b) in f.attack_indices() {
        m[a][b] = 1;
    }
    let mut p = m.clone();
    let mut out = vec![Vec::with_capacity(up_to); n];
    for _ in 0..up_to {
        for (v, row) in out.iter_mut().enumerate() {
            row.push((0..n).map(|r| p[r][v]).sum());
        }
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for k in 0..n {
                if p[i][k] != 0 {
                    for j in 0..n {
                        next[i][j] += p[i][k] * m[k][j];
                    }
                }
            }
        }
        p = next;
    }
    out
}

/// Signed discussion values from raw counts (index 0 is length 1).
pub fn signed_dis(counts: &[i128]) -> Vec<i128> {
    counts
        .iter()
        .enumerate()
        .map(|(i, &c)| if i % 2 == 0 { -c } else { c })
        .collect()
}
