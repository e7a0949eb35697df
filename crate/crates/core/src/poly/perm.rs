//! Lexicographic ranking of permutations, used to index multilinear monomials.

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Lexicographic rank of a permutation of `0..n` given in one-line form.
pub fn rank(word: &[usize]) -> usize {
    let n = word.len();
    let mut r = 0;
    let mut used = 0u64;
    for (pos, &v) in word.iter().enumerate() {
        let smaller_unused = (0..v).filter(|&u| used & (1 << u) == 0).count();
        r += smaller_unused * factorial(n - 1 - pos);
        used |= 1 << v;
    }
    r
}

pub fn unrank(n: usize, mut r: usize) -> Vec<usize> {
    let mut free: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    for pos in 0..n {
        let f = factorial(n - 1 - pos);
        out.push(free.remove(r / f));
        r %= f;
    }
    out
}

/// All permutations of `0..n` in lexicographic order.
pub fn all(n: usize) -> Vec<Vec<usize>> {
    (0..factorial(n)).map(|r| unrank(n, r)).collect()
}

/// Sign of the permutation that sorts `seq` (distinct entries).
pub fn sort_sign(seq: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_unrank_round_trip() {
        for n in 0..=6 {
            let perms = all(n);
            assert_eq!(perms.len(), factorial(n));
            for (r, p) in perms.iter().enumerate() {
                assert_eq!(rank(p), r);
            }
            let mut sorted = perms.clone();
            sorted.sort();
            assert_eq!(sorted, perms);
        }
    }

    #[test]
    fn signs() {
        assert_eq!(sort_sign(&[0, 1, 2]), 1);
        assert_eq!(sort_sign(&[1, 0]), -1);
        assert_eq!(sort_sign(&[2, 0, 1]), 1);
        assert_eq!(sort_sign(&[]), 1);
    }
}
