//! Multi-index bookkeeping: sorted subsets as bitmasks, lexicographic
//! ranking, merge signs.

/// Subset tables for a fixed ground set size n. A strictly increasing
/// k-tuple is represented by the bitmask of its members; tuples are ranked
/// lexicographically (as sorted tuples).
pub struct IndexTables {
    n: usize,
    /// subsets[k] lists the k-subset masks in lexicographic tuple order.
    subsets: Vec<Vec<u32>>,
    /// rank[k][mask] inverts `subsets`; unused entries hold u32::MAX.
    rank: Vec<Vec<u32>>,
}

fn combinations(n: usize, k: usize) -> Vec<u32> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let mut out = Vec::with_capacity(super::binomial(n, k));
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        out.push(c.iter().fold(0u32, |m, &i| m | 1 << i));
        // rightmost position that can still be advanced
        let mut i = k as isize - 1;
        while i >= 0 && c[i as usize] == n - k + i as usize {
            i -= 1;
        }
        if i < 0 {
            break;
        }
        let i = i as usize;
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
    out
}

impl IndexTables {
    pub fn new(n: usize) -> Self {
        assert!(n <= 16);
        let mut subsets = Vec::with_capacity(n + 1);
        let mut rank = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let list = combinations(n, k);
            debug_assert_eq!(list.len(), super::binomial(n, k));
            let mut r = vec![u32::MAX; 1 << n];
            for (i, &m) in list.iter().enumerate() {
                r[m as usize] = i as u32;
            }
            subsets.push(list);
            rank.push(r);
        }
        Self { n, subsets, rank }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// All k-subsets as masks, lexicographic tuple order.
    pub fn subsets(&self, k: usize) -> &[u32] {
        &self.subsets[k]
    }

    /// Rank of a subset mask among same-cardinality subsets.
    #[inline]
    pub fn rank(&self, k: usize, mask: u32) -> usize {
        let r = self.rank[k][mask as usize];
        debug_assert_ne!(r, u32::MAX);
        r as usize
    }

    /// Members of a mask in increasing order.
    pub fn members(mask: u32) -> impl Iterator<Item = usize> {
        (0..32).filter(move |i| mask >> i & 1 == 1)
    }
}

/// Sign of sorting the concatenation (A, B) of two disjoint sorted index
/// sets: (−1)^{#inversions between the blocks}.
#[inline]
pub fn merge_sign(a: u32, b: u32) -> f64 {
    debug_assert_eq!(a & b, 0);
    let mut inversions = 0u32;
    let mut a_bits = a;
    while a_bits != 0 {
        let i = a_bits.trailing_zeros();
        inversions += (b & ((1u32 << i) - 1)).count_ones();
        a_bits &= a_bits - 1;
    }
    if inversions % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}
