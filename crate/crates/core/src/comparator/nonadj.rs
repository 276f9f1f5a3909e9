use crate::naf::size_i64;

/// `max(0, N − size(n_x))`, taking `2^n_x` as the binade's representative.
///
/// Inside a binade the precision can drop by one past `4/3 · 2^n_x`, where
/// the real width moves up; this figure ignores that.
pub fn nonadj_pbom(width: u32, n_x: i64) -> u64 {
    (width as i64 - size_i64(n_x) as i64).max(0) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(nonadj_pbom(32, 0), 32);
        assert_eq!(nonadj_pbom(16, 148), 8);
        assert_eq!(nonadj_pbom(16, -148), 8);
        assert_eq!(nonadj_pbom(8, 85), 1);
        assert_eq!(nonadj_pbom(8, 86), 0);
    }

    #[test]
    fn symmetric() {
        for n in [8, 16, 32, 64] {
            for x in 0..2000 {
                assert_eq!(nonadj_pbom(n, x), nonadj_pbom(n, -x));
            }
        }
    }
}
