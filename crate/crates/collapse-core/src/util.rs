//! Small combinatorial helpers.

use alloc::vec::Vec;

/// Binomial coefficient C(n, k). Panics on u64 overflow, which does not occur
/// for the parameter ranges this crate accepts.
pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        // acc is C(n-k+i-1, i-1) here, so the division is exact.
        acc = acc * (n as u128 - k as u128 + i) / i;
    }
    assert!(acc <= u64::MAX as u128, "binomial overflow");
    acc as u64
}

/// Visits every k-subset of {0, .., n-1} in lexicographic order.
pub(crate) fn for_each_combination(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        // Rightmost position that can still advance.
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Visits every permutation of `items` (Heap's algorithm). The first visit is
/// the untouched input order.
pub(crate) fn for_each_permutation<T: Clone>(items: &[T], f: &mut dyn FnMut(&[T])) {
    let mut a: Vec<T> = items.to_vec();
    let n = a.len();
    let mut c = alloc::vec![0usize; n];
    f(&a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            f(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(60, 30), 118264581564861424);
    }

    #[test]
    fn combinations_lex() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, &mut |c| seen.push(c.to_vec()));
        assert_eq!(
            seen,
            alloc::vec![
                alloc::vec![0, 1],
                alloc::vec![0, 2],
                alloc::vec![0, 3],
                alloc::vec![1, 2],
                alloc::vec![1, 3],
                alloc::vec![2, 3]
            ]
        );
        let mut empties = 0;
        for_each_combination(3, 0, &mut |c| {
            assert!(c.is_empty());
            empties += 1;
        });
        assert_eq!(empties, 1);
    }

    #[test]
    fn permutations_count() {
        let mut count = 0;
        for_each_permutation(&[1, 2, 3, 4], &mut |_| count += 1);
        assert_eq!(count, 24);
    }
}
