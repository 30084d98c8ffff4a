use crate::{CoreError, Result};

/// A set of row indices (0-based) identifying the nonzero rows of a jointly
/// sparse signal. Stored sorted and without duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SupportSet {
    indices: Vec<usize>,
}

impl SupportSet {
    /// Builds a support from arbitrary indices, sorting and deduplicating.
    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut indices: Vec<usize> = indices.into_iter().collect();
        indices.sort_unstable();
        indices.dedup();
        Self { indices }
    }

    /// Checks every index lies in `[0, n)`.
    pub fn validate_within(&self, n: usize) -> Result<()> {
        match self.indices.last() {
            Some(&max) if max >= n => Err(CoreError::SupportOutOfRange { index: max, n }),
            _ => Ok(()),
        }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.indices.binary_search(&index).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.indices
    }

    /// Support distance `d(S, Ŝ) = |S \ Ŝ|` between equal-size supports; the
    /// number of true indices the estimate misses.
    pub fn distance_to(&self, estimate: &SupportSet) -> Result<usize> {
        if self.len() != estimate.len() {
            return Err(CoreError::SupportSizeMismatch {
                left: self.len(),
                right: estimate.len(),
            });
        }
        Ok(self.iter().filter(|&i| !estimate.contains(i)).count())
    }

    /// Indices rendered 1-based, the convention used in human-facing output.
    pub fn to_one_based(&self) -> Vec<usize> {
        self.indices.iter().map(|i| i + 1).collect()
    }
}

impl FromIterator<usize> for SupportSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Self::from_indices(iter)
    }
}

/// Free-function form of [`SupportSet::distance_to`].
pub fn support_distance(truth: &SupportSet, estimate: &SupportSet) -> Result<usize> {
    truth.distance_to(estimate)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_sets_have_distance_zero() {
        let s = SupportSet::from_indices([1, 2, 3]);
        assert_eq!(s.distance_to(&s).unwrap(), 0);
    }

    #[test]
    fn one_miss() {
        let s = SupportSet::from_indices([1, 2, 3]);
        let s_hat = SupportSet::from_indices([1, 2, 9]);
        assert_eq!(s.distance_to(&s_hat).unwrap(), 1);
    }

    #[test]
    fn half_overlapping_ranges() {
        let s = SupportSet::from_indices(1..=10);
        let s_hat = SupportSet::from_indices(6..=15);
        assert_eq!(s.distance_to(&s_hat).unwrap(), 5);
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let s = SupportSet::from_indices([1, 2, 3]);
        let s_hat = SupportSet::from_indices([1, 2]);
        assert!(matches!(
            s.distance_to(&s_hat),
            Err(CoreError::SupportSizeMismatch { .. })
        ));
    }

    #[test]
    fn symmetric_on_equal_sizes() {
        // d(S, Ŝ) = d(Ŝ, S) whenever |S| = |Ŝ|: both count the symmetric
        // difference halves, which are equal in size.
        let cases = [
            (vec![0, 1, 2], vec![2, 3, 4]),
            (vec![5, 7, 9, 11], vec![5, 7, 9, 11]),
            (vec![0, 10, 20], vec![1, 10, 21]),
        ];
        for (a, b) in cases {
            let sa = SupportSet::from_indices(a);
            let sb = SupportSet::from_indices(b);
            assert_eq!(
                sa.distance_to(&sb).unwrap(),
                sb.distance_to(&sa).unwrap()
            );
        }
    }

    #[test]
    fn duplicates_collapse() {
        let s = SupportSet::from_indices([3, 1, 3, 1]);
        assert_eq!(s.as_slice(), &[1, 3]);
    }
}
