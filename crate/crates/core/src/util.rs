/// Calls `f` on every subset of `items` with at most `k` elements, in
/// lexicographic order of index sequences (the empty subset first).
pub(crate) fn for_each_subset_up_to<E>(
    items: &[usize],
    k: usize,
    f: &mut impl FnMut(&[usize]) -> Result<(), E>,
) -> Result<(), E> {
    fn rec<E>(items: &[usize], k: usize, start: usize, chosen: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> Result<(), E>) -> Result<(), E> {
        f(chosen)?;
        if chosen.len() == k {
            return Ok(());
        }
        for i in start..items.len() {
            chosen.push(items[i]);
            rec(items, k, i + 1, chosen, f)?;
            chosen.pop();
        }
        Ok(())
    }
    rec(items, k, 0, &mut Vec::with_capacity(k), f)
}

/// Binomial coefficient as `f64`.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}
