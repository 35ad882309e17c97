use super::complex::Complex;
use crate::error::{Error, Result};

/// Neumaier-compensated accumulator over complex terms, applied
/// componentwise. Also records the largest partial-sum magnitude seen, which
/// callers use as a cancellation estimate.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    re: f64,
    im: f64,
    re_comp: f64,
    im_comp: f64,
    max_partial: f64,
    max_term: f64,
    len: usize,
}

#[inline]
fn neumaier(sum: &mut f64, comp: &mut f64, x: f64) {
    let t = *sum + x;
    if sum.abs() >= x.abs() {
        *comp += (*sum - t) + x;
    } else {
        *comp += (x - t) + *sum;
    }
    *sum = t;
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: Complex) {
        neumaier(&mut self.re, &mut self.re_comp, x.re);
        neumaier(&mut self.im, &mut self.im_comp, x.im);
        self.len += 1;
        self.max_term = self.max_term.max(x.norm());
        self.max_partial = self.max_partial.max(self.value().norm());
    }

    #[inline]
    pub fn value(&self) -> Complex {
        Complex::new(self.re + self.re_comp, self.im + self.im_comp)
    }

    /// Largest |partial sum| or |term| seen so far.
    pub fn magnitude(&self) -> f64 {
        self.max_partial.max(self.max_term)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The compensated total, or an overflow error if any partial left the
    /// double range.
    pub fn finish(&self) -> Result<Complex> {
        let v = self.value();
        if v.re.is_finite() && v.im.is_finite() && self.max_partial.is_finite() {
            Ok(v)
        } else {
            Err(Error::Overflow(
                "partial sums exceed the double range".into(),
            ))
        }
    }
}

impl Extend<Complex> for CompensatedSum {
    fn extend<T: IntoIterator<Item = Complex>>(&mut self, iter: T) {
        for x in iter {
            self.add(x);
        }
    }
}

pub fn compensated_sum<I: IntoIterator<Item = Complex>>(terms: I) -> Result<Complex> {
    let mut acc = CompensatedSum::new();
    acc.extend(terms);
    acc.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{c, real, ZERO};
    use proptest::prelude::*;

    #[test]
    fn empty_sum_is_zero() {
        assert_eq!(compensated_sum(std::iter::empty()).unwrap(), ZERO);
    }

    #[test]
    fn keeps_what_naive_summation_loses() {
        let terms = [real(1.0), real(-1.0), real(1e-20)];
        assert_eq!(compensated_sum(terms).unwrap(), real(1e-20));
        let terms = [real(1e-20), real(1.0), real(-1.0)];
        assert_eq!(compensated_sum(terms).unwrap(), real(1e-20));
        let naive: f64 = [1e-20, 1.0, -1.0].iter().sum();
        assert_eq!(naive, 0.0);
    }

    #[test]
    fn ten_thousand_tenths() {
        // Exact value of 10^4 * fl(0.1): fl(0.1) = 3602879701896397 / 2^55.
        let exact = (3_602_879_701_896_397u128 * 10_000) as f64 / 2f64.powi(55);
        let got = compensated_sum(std::iter::repeat_n(real(0.1), 10_000)).unwrap();
        assert!((got.re - exact).abs() <= 1e-9);
        assert!((got.re - 1000.0).abs() <= 1e-9);
        assert_eq!(got.re, exact);
    }

    #[test]
    fn overflow_is_reported() {
        let r = compensated_sum([real(f64::MAX), real(f64::MAX)]);
        assert!(matches!(r, Err(Error::Overflow(_))));
    }

    #[test]
    fn magnitude_tracks_cancellation() {
        let mut acc = CompensatedSum::new();
        acc.extend([c(1e8, 0.0), c(-1e8, 1.0)]);
        assert_eq!(acc.value(), c(0.0, 1.0));
        assert!(acc.magnitude() >= 1e8);
    }

    proptest! {
        #[test]
        fn permutation_insensitive(
            terms in proptest::collection::vec((-1e6f64..1e6, -1e6f64..1e6), 1000),
            seed in any::<u64>(),
        ) {
            let xs: Vec<Complex> = terms.iter().map(|&(a, b)| c(a, b)).collect();
            let mut shuffled = xs.clone();
            // Fisher-Yates with a small LCG keeps the test self-contained.
            let mut state = seed | 1;
            for i in (1..shuffled.len()).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                shuffled.swap(i, j);
            }
            let a = compensated_sum(xs.iter().copied()).unwrap();
            let b = compensated_sum(shuffled).unwrap();
            let abs_total: f64 = xs.iter().map(|t| t.re.abs() + t.im.abs()).sum();
            // Neumaier bound: 2 eps |sum| + O(n eps^2) sum|x|.
            let bound = 2.0 * f64::EPSILON * a.norm() + 1000.0 * f64::EPSILON * f64::EPSILON * abs_total;
            prop_assert!((a - b).norm() <= 10.0 * bound.max(f64::MIN_POSITIVE));
        }
    }
}
