use crate::error::{Error, Result};

/// Largest `g` with `g + 2^g + 2 <= N`.
pub fn morris_max_g(width: u32) -> Result<u32> {
    (1..32u32)
        .take_while(|&g| g as u64 + (1u64 << g) + 2 <= width as u64)
        .last()
        .ok_or_else(|| {
            Error::InvalidArgument(format!(
                "width {width} too small for a Morris exponent field"
            ))
        })
}

/// Morris tapered numbers in the non-redundant convention: the exponent
/// field holds exactly the digits of `|n_x|`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct MorrisModel {
    pub width: u32,
    pub g: u32,
}

impl MorrisModel {
    pub fn new(width: u32, g: u32) -> Result<Self> {
        let max = morris_max_g(width)?;
        if g == 0 || g > max {
            return Err(Error::InvalidArgument(format!(
                "Morris g must lie in 1..={max} at width {width}"
            )));
        }
        Ok(MorrisModel { width, g })
    }

    /// Digits available to the exponent magnitude, `2^g`.
    pub fn exponent_digits(&self) -> u32 {
        1 << self.g
    }

    /// Largest exponent magnitude, `2^(2^g) − 1`.
    pub fn max_exponent(&self) -> u64 {
        match self.exponent_digits() {
            d if d >= 64 => u64::MAX,
            d => (1u64 << d) - 1,
        }
    }

    /// `N − g − 2 − ⌊log₂ |n_x|⌋` inside the range, 0 outside it, and
    /// `None` for the exceptional exponent 0.
    pub fn precision(&self, n_x: i64) -> Option<u64> {
        if n_x == 0 {
            return None;
        }
        let a = n_x.unsigned_abs();
        if a > self.max_exponent() {
            return Some(0);
        }
        let log = 63 - a.leading_zeros() as i64;
        Some((self.width as i64 - self.g as i64 - 2 - log).max(0) as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(morris_max_g(36).unwrap(), 4);
        assert_eq!(morris_max_g(22).unwrap(), 4);
        assert_eq!(morris_max_g(21).unwrap(), 3);
        assert!(morris_max_g(4).is_err());
        let m = MorrisModel::new(36, 3).unwrap();
        assert_eq!(m.precision(8), Some(28));
        assert_eq!(m.precision(-8), Some(28));
        assert_eq!(m.precision(0), None);
        assert_eq!(m.precision(255), Some(24));
        assert_eq!(m.precision(256), Some(0));
        assert_eq!(m.exponent_digits(), 8);
        // The widest exponent still leaves one digit.
        let top = MorrisModel::new(22, 4).unwrap();
        assert_eq!(top.precision(65535), Some(1));
        assert!(MorrisModel::new(36, 5).is_err());
    }
}
