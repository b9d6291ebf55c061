//! Maps between permutations that carry one statistic to another.

use crate::error::{Error, Result};
use crate::groups::Perm;

/// Foata's fundamental transformation, arranged so that
/// `des(foata_fft(p)) == exc(p)`.
///
/// The cycles of `p^-1` are written with their maximum first, sorted by
/// increasing maximum, and concatenated. Descents of the resulting word are
/// exactly the drops of `p^-1`, which are the excedances of `p`.
pub fn foata_fft(p: &Perm) -> Perm {
    let inv = p.inverse();
    let mut cycles: Vec<Vec<usize>> = inv
        .cycles()
        .into_iter()
        .map(|mut c| {
            let top = c.iter().enumerate().max_by_key(|&(_, v)| v).map(|(i, _)| i).unwrap_or(0);
            c.rotate_left(top);
            c
        })
        .collect();
    cycles.sort_by_key(|c| c[0]);
    Perm::from_vec_unchecked(cycles.concat())
}

/// Inverse of [`foata_fft`]: cut the word before each left-to-right maximum.
pub fn foata_fft_inverse(w: &Perm) -> Perm {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut best = 0;
    for &v in w.window() {
        if v > best {
            best = v;
            cycles.push(vec![v]);
        } else {
            cycles.last_mut().expect("first letter opens a cycle").push(v);
        }
    }
    Perm::from_cycles(w.len(), &cycles)
        .expect("cycles of a word are disjoint")
        .inverse()
}

/// For `p` with the letter `n` in position `n-1`: delete `n`, apply
/// [`foata_fft`], and put `n` in front. Sends `exc` to `des` and `nexc - 1`
/// to `asc`.
pub fn move_n_to_front(p: &Perm) -> Result<Perm> {
    let n = p.len();
    if n < 2 || p.pos_n() != n - 1 {
        return Err(Error::PreconditionViolated(format!(
            "the letter n must sit in position n-1, got {p}"
        )));
    }
    let rest: Vec<usize> = p.window().iter().copied().filter(|&v| v != n).collect();
    let mut out = vec![n];
    out.extend_from_slice(foata_fft(&Perm::from_vec_unchecked(rest)).window());
    Ok(Perm::from_vec_unchecked(out))
}

/// Inverse of [`move_n_to_front`].
pub fn move_n_to_front_inverse(p: &Perm) -> Result<Perm> {
    let n = p.len();
    if n < 2 || p.pos_n() != 1 {
        return Err(Error::PreconditionViolated(format!(
            "the letter n must come first, got {p}"
        )));
    }
    let rest = foata_fft_inverse(&Perm::from_vec_unchecked(p.window()[1..].to_vec()));
    let mut out = rest.window().to_vec();
    out.insert(n - 2, n);
    Ok(Perm::from_vec_unchecked(out))
}

/// Swaps the last two entries. When `n` is not among them this keeps `exc`
/// and flips the sign.
pub fn swap_tail(p: &Perm) -> Result<Perm> {
    let n = p.len();
    if n < 3 || p.pos_n() > n - 2 {
        return Err(Error::PreconditionViolated(format!(
            "the letter n must sit before position n-1, got {p}"
        )));
    }
    let mut w = p.window().to_vec();
    w.swap(n - 2, n - 1);
    Ok(Perm::from_vec_unchecked(w))
}

/// Sends `a` in `S_{n-1}` to the `n`-cycle `(1, n+1-a_1, ..., n+1-a_{n-1})`.
/// Descents of `a` become the non-initial excedances of the cycle, so
/// `exc = des + 1`.
pub fn cycle_map(a: &Perm) -> Perm {
    let n = a.len() + 1;
    let mut cycle = vec![1];
    cycle.extend(a.window().iter().map(|&v| n + 1 - v));
    Perm::from_cycles(n, &[cycle]).expect("a relabelled window is a cycle")
}

/// Inverse of [`cycle_map`]; fails unless `c` is a single `n`-cycle.
pub fn cycle_map_inverse(c: &Perm) -> Result<Perm> {
    let n = c.len();
    let cycles = c.cycles();
    if n < 2 || cycles.len() != 1 {
        return Err(Error::PreconditionViolated(format!("{c} is not an {n}-cycle")));
    }
    let window = cycles[0][1..].iter().map(|&v| n + 1 - v).collect();
    Ok(Perm::from_vec_unchecked(window))
}

/// Relabels a cycle on an arbitrary set of positive integers to a cycle on
/// `[k]`, keeping the relative order of the letters. Returns the resulting
/// permutation of `[k]`.
pub fn restrict_order_preserving(cycle: &[usize]) -> Result<Perm> {
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateEntries(w[0] as u32));
    }
    if sorted.first() == Some(&0) {
        return Err(Error::InvalidSpec("cycle entries must be positive".into()));
    }
    let rank = |v: usize| sorted.binary_search(&v).expect("entry is present") + 1;
    let relabelled: Vec<usize> = cycle.iter().map(|&v| rank(v)).collect();
    Perm::from_cycles(cycle.len(), &[relabelled])
}

/// Excedances of a cycle read on its own support: letters `x` whose
/// successor in the cycle is larger.
pub fn cycle_excedances(cycle: &[usize]) -> usize {
    (0..cycle.len())
        .filter(|&i| cycle[(i + 1) % cycle.len()] > cycle[i])
        .count()
}
