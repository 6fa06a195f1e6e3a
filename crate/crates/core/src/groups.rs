//! Stock finite groups as operation tables, all with trivial star; use
//! [`FiniteMla::with_star`] or [`FiniteMla::with_commutator_star`] to put a
//! bracket on them. The identity is index 0 throughout.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::{direct_product, FiniteMla};

/// `Z_n` with addition, elements named by residue.
pub fn cyclic(n: usize) -> FiniteMla {
    let mut table = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = (a + b) % n;
        }
    }
    let names = (0..n).map(|i| i.to_string()).collect();
    FiniteMla::new(n, table, vec![0; n * n], Some(names)).expect("cyclic tables are well-shaped")
}

fn bitwise_abelian(bits: u32, names: &[&str]) -> FiniteMla {
    let n = 1usize << bits;
    let mut table = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = a ^ b;
        }
    }
    let names = names.iter().map(|s| s.to_string()).collect();
    FiniteMla::new(n, table, vec![0; n * n], Some(names)).expect("xor tables are well-shaped")
}

/// The Klein four-group `Z2 × Z2`.
pub fn klein_four() -> FiniteMla {
    bitwise_abelian(2, &["1", "a", "b", "ab"])
}

/// `Z2 × Z2 × Z2`.
pub fn elementary_abelian_eight() -> FiniteMla {
    bitwise_abelian(3, &["1", "a", "b", "ab", "c", "ac", "bc", "abc"])
}

/// `Z4 × Z2`, indexed as pairs `(x, y) ↦ 2x + y`.
pub fn z4xz2() -> FiniteMla {
    let a = Arc::new(cyclic(4));
    let b = Arc::new(cyclic(2));
    (*direct_product(&a, &b)).clone()
}

/// Dihedral group of order `2m`: rotations `b^i` at indices `0..m`,
/// reflections `b^i a` at indices `m..2m`.
pub fn dihedral(m: usize) -> FiniteMla {
    assert!(m >= 1, "dihedral group needs at least one rotation");
    let n = 2 * m;
    let idx = |i: usize, j: usize| i + m * j;
    let mut table = vec![0usize; n * n];
    for i in 0..m {
        for j in 0..2 {
            for k in 0..m {
                for l in 0..2 {
                    // (b^i a^j)(b^k a^l) = b^(i ± k) a^(j+l), the sign set
                    // by whether a^j already flips.
                    let rot = if j == 0 { (i + k) % m } else { (i + m - k) % m };
                    table[idx(i, j) * n + idx(k, l)] = idx(rot, (j + l) % 2);
                }
            }
        }
    }
    let mut names = Vec::with_capacity(n);
    for j in 0..2 {
        for i in 0..m {
            let rot = match i {
                0 => String::new(),
                1 => "b".to_string(),
                _ => format!("b^{i}"),
            };
            let name = match (rot.as_str(), j) {
                ("", 0) => "1".to_string(),
                (r, 0) => r.to_string(),
                ("", _) => "a".to_string(),
                (r, _) => format!("{r}a"),
            };
            names.push(name);
        }
    }
    FiniteMla::new(n, table, vec![0; n * n], Some(names)).expect("dihedral tables are well-shaped")
}

/// The quaternion group `{±1, ±i, ±j, ±k}`, indexed as `2·basis + sign`.
pub fn quaternion() -> FiniteMla {
    // Basis products over (1, i, j, k) as (sign, basis) pairs.
    const BASIS: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let n = 8;
    let mut table = vec![0usize; n * n];
    for s1 in 0..2 {
        for u1 in 0..4 {
            for s2 in 0..2 {
                for u2 in 0..4 {
                    let (sigma, w) = BASIS[u1][u2];
                    table[(2 * u1 + s1) * n + (2 * u2 + s2)] = 2 * w + (s1 ^ s2 ^ sigma);
                }
            }
        }
    }
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    FiniteMla::new(n, table, vec![0; n * n], Some(names)).expect("quaternion table is well-shaped")
}

fn permutations_lex(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, used: &mut [bool], current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                rec(n, used, current, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut vec![false; n], &mut Vec::with_capacity(n), &mut out);
    out
}

fn is_even(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut transpositions = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

/// Cycle notation on 1-based points, `"1"` for the identity.
fn cycle_name(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = perm[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        "1".to_string()
    } else {
        out
    }
}

fn perm_group(perms: Vec<Vec<usize>>) -> FiniteMla {
    let n = perms.len();
    let index: HashMap<&[usize], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let mut table = vec![0usize; n * n];
    for (i, f) in perms.iter().enumerate() {
        for (j, g) in perms.iter().enumerate() {
            // Composition applies the right factor first: (f·g)(x) = f(g(x)).
            let composed: Vec<usize> = (0..f.len()).map(|x| f[g[x]]).collect();
            table[i * n + j] = index[composed.as_slice()];
        }
    }
    let names = perms.iter().map(|p| cycle_name(p)).collect();
    FiniteMla::new(n, table, vec![0; n * n], Some(names))
        .expect("permutation tables are well-shaped")
}

/// Symmetric group on `n` points; permutations indexed in lexicographic
/// one-line order, so the identity is index 0.
pub fn symmetric(n: usize) -> FiniteMla {
    perm_group(permutations_lex(n))
}

/// Alternating group on `n` points, indexed like [`symmetric`] restricted
/// to even permutations.
pub fn alternating(n: usize) -> FiniteMla {
    perm_group(
        permutations_lex(n)
            .into_iter()
            .filter(|p| is_even(p))
            .collect(),
    )
}

/// Named sample groups up to `max_order`, sorted by order then name. Covers
/// every isomorphism class of order at most 8, plus a few larger ones.
pub fn builtin_groups(max_order: usize) -> Vec<(String, FiniteMla)> {
    let mut list: Vec<(String, FiniteMla)> = Vec::new();
    for n in 1..=12 {
        list.push((format!("Z{n}"), cyclic(n)));
    }
    list.push(("V4".into(), klein_four()));
    list.push(("S3".into(), symmetric(3)));
    list.push(("D4".into(), dihedral(4)));
    list.push(("Q8".into(), quaternion()));
    list.push(("Z4xZ2".into(), z4xz2()));
    list.push(("Z2xZ2xZ2".into(), elementary_abelian_eight()));
    list.push(("D5".into(), dihedral(5)));
    list.push(("D6".into(), dihedral(6)));
    list.retain(|(_, g)| g.order() <= max_order);
    list.sort_by(|(an, a), (bn, b)| a.order().cmp(&b.order()).then_with(|| an.cmp(bn)));
    list
}
