use crate::error::{Error, Result};
use crate::ffield::FactorPattern;
use crate::kummer::NodeOrbitData;

/// A permutation of the six Weierstrass roots with the given cycle lengths.
fn permutation_with_cycles(lengths: &[usize]) -> [usize; 6] {
    let mut perm = [0usize; 6];
    let mut start = 0;
    for &l in lengths {
        for i in 0..l {
            perm[start + i] = start + (i + 1) % l;
        }
        start += l;
    }
    perm
}

/// Cycle lengths of a permutation on the sixteen classes of J[2]: the empty set
/// and the fifteen pairs of roots (a pair is identified with its complement).
pub fn two_torsion_cycles(perm: &[usize; 6]) -> Vec<u32> {
    let pairs: Vec<(usize, usize)> = (0..6).flat_map(|i| (i + 1..6).map(move |j| (i, j))).collect();
    let index = |a: usize, b: usize| pairs.iter().position(|&x| x == (a.min(b), a.max(b))).unwrap();
    let image: Vec<usize> = pairs.iter().map(|&(a, b)| index(perm[a], perm[b])).collect();
    let mut seen = [false; 15];
    let mut out = vec![1u32];
    for s in 0..15 {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = image[x];
            len += 1;
        }
        out.push(len);
    }
    out.sort();
    out
}

/// Orbit lengths of Frobenius on the sixteen nodes, from the factorization pattern
/// of the branch sextic (a quintic is padded with its rational root at infinity).
/// Checks that the twelve nodes on coordinate lines fit inside the result and
/// records the remaining four in `obvious.hidden`.
pub fn node_action(pattern: &FactorPattern, obvious: &mut NodeOrbitData) -> Result<Vec<u32>> {
    if pattern.iter().any(|&(_, m)| m != 1) {
        return Err(Error::Consistency("branch polynomial is not squarefree".into()));
    }
    let mut lengths: Vec<usize> = pattern.iter().map(|&(d, _)| d).collect();
    match lengths.iter().sum::<usize>() {
        6 => {}
        5 => lengths.push(1),
        s => return Err(Error::Consistency(format!("pattern of degree {s}"))),
    }
    let total = two_torsion_cycles(&permutation_with_cycles(&lengths));
    let mut rest = total.clone();
    for m in obvious.obvious_partition() {
        match rest.iter().position(|&x| x == m) {
            Some(i) => {
                rest.remove(i);
            }
            None => {
                return Err(Error::Consistency(format!(
                    "obvious node orbits {:?} do not fit in {total:?}",
                    obvious.obvious_partition()
                )))
            }
        }
    }
    obvious.hidden = Some(rest);
    Ok(total)
}
