use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact value `mantissa · 2^exponent`.
///
/// Always normalised: the mantissa is odd, or it is zero and the exponent is
/// zero. Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: i64,
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic {
            mantissa: BigInt::zero(),
            exponent: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic {
            mantissa: BigInt::one(),
            exponent: 0,
        }
    }

    /// `2^e`.
    pub fn pow2(e: i64) -> Self {
        Dyadic {
            mantissa: BigInt::one(),
            exponent: e,
        }
    }

    pub fn new(mantissa: impl Into<BigInt>, exponent: i64) -> Self {
        let mut mantissa = mantissa.into();
        if mantissa.is_zero() {
            return Self::zero();
        }
        let tz = mantissa.trailing_zeros().unwrap_or(0);
        mantissa >>= tz;
        Dyadic {
            mantissa,
            exponent: exponent + tz as i64,
        }
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Self::new(v, 0)
    }

    /// Odd mantissa (zero for zero).
    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mantissa.is_positive()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match self.mantissa.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            mantissa: self.mantissa.abs(),
            exponent: self.exponent,
        }
    }

    pub fn is_integer(&self) -> bool {
        self.is_zero() || self.exponent >= 0
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.is_zero() {
            Some(BigInt::zero())
        } else if self.exponent >= 0 {
            Some(&self.mantissa << self.exponent as usize)
        } else {
            None
        }
    }

    /// Multiplies by `2^k`.
    pub fn shl(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Dyadic {
            mantissa: self.mantissa.clone(),
            exponent: self.exponent + k,
        }
    }

    /// `⌊log2 |x|⌋`. `None` for zero.
    pub fn floor_log2(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(self.mantissa.magnitude().bits() as i64 - 1 + self.exponent)
    }

    /// `⌊x / 2^k⌋`.
    pub fn floor_div_pow2(&self, k: i64) -> BigInt {
        let e = self.exponent - k;
        if self.is_zero() {
            BigInt::zero()
        } else if e >= 0 {
            &self.mantissa << e as usize
        } else {
            // Arithmetic right shift floors for negative BigInt.
            self.mantissa.clone() >> (-e) as usize
        }
    }

    /// `⌈x / 2^k⌉`.
    pub fn ceil_div_pow2(&self, k: i64) -> BigInt {
        -((-self).floor_div_pow2(k))
    }

    /// `x / 2^k` when that quotient is an integer.
    pub fn exact_div_pow2(&self, k: i64) -> Option<BigInt> {
        self.shl(-k).to_integer()
    }

    /// Nearest `f64`. Only for display and plotting.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mantissa.magnitude().bits() as i64;
        // Keep 64 leading bits so the conversion rounds once.
        let drop = (bits - 64).max(0);
        let m = (&self.mantissa >> drop as usize)
            .to_f64()
            .unwrap_or(f64::NAN);
        let e = self.exponent + drop;
        let e = e.clamp(-4000, 4000) as i32;
        if e > 1000 {
            m * 2f64.powi(1000) * 2f64.powi(e - 1000)
        } else if e < -1000 {
            m * 2f64.powi(-1000) * 2f64.powi(e + 1000)
        } else {
            m * 2f64.powi(e)
        }
    }

    /// Exact value of a finite `f64`.
    pub fn from_f64(x: f64) -> Option<Self> {
        if !x.is_finite() {
            return None;
        }
        if x == 0.0 {
            return Some(Self::zero());
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if biased == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), biased - 1075)
        };
        Some(Self::new(BigInt::from(m) * sign, e))
    }

    /// Finite decimal expansion, e.g. `-0.375`.
    pub fn to_decimal_string(&self) -> String {
        if self.exponent >= 0 || self.is_zero() {
            return self.to_integer().unwrap().to_string();
        }
        let k = (-self.exponent) as usize;
        // m·2^-k = m·5^k / 10^k
        let scaled = self.mantissa.abs() * num_traits::pow(BigInt::from(5), k);
        let mut digits = scaled.to_string();
        if digits.len() <= k {
            digits = "0".repeat(k + 1 - digits.len()) + &digits;
        }
        let split = digits.len() - k;
        let sign = if self.is_negative() { "-" } else { "" };
        format!("{sign}{}.{}", &digits[..split], &digits[split..])
    }

    /// `104.5 (= 209 * 2^-1)`.
    pub fn describe(&self) -> String {
        format!(
            "{} (= {} * 2^{})",
            self.to_decimal_string(),
            self.mantissa,
            self.exponent
        )
    }

    fn aligned(a: &Dyadic, b: &Dyadic) -> (BigInt, BigInt, i64) {
        let e = a.exponent.min(b.exponent);
        let ma = &a.mantissa << (a.exponent - e) as usize;
        let mb = &b.mantissa << (b.exponent - e) as usize;
        (ma, mb, e)
    }
}

impl Default for Dyadic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Dyadic {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl From<i32> for Dyadic {
    fn from(v: i32) -> Self {
        Self::from_int(v)
    }
}

impl From<BigInt> for Dyadic {
    fn from(v: BigInt) -> Self {
        Self::from_int(v)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.signum().cmp(&other.signum()) {
            Ordering::Equal => {}
            o => return o,
        }
        if self.is_zero() {
            return Ordering::Equal;
        }
        let (a, b, _) = Dyadic::aligned(self, other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            mantissa: -self.mantissa,
            exponent: self.exponent,
        }
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            mantissa: -&self.mantissa,
            exponent: self.exponent,
        }
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, e) = Dyadic::aligned(self, rhs);
        Dyadic::new(a + b, e)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, e) = Dyadic::aligned(self, rhs);
        Dyadic::new(a - b, e)
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mantissa * &rhs.mantissa, self.exponent + rhs.exponent)
    }
}

macro_rules! by_value {
    ($tr:ident, $m:ident) => {
        impl $tr for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: Dyadic) -> Dyadic {
                (&self).$m(&rhs)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string())
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dyadic({} * 2^{})", self.mantissa, self.exponent)
    }
}

impl FromStr for Dyadic {
    type Err = Error;

    /// Accepts decimals (`-104.5`, `1.25e3`), fractions with a power-of-two
    /// denominator (`3/8`) and explicit `m*2^e` forms.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::InvalidNumber(s.to_string());
        if t.is_empty() {
            return Err(bad());
        }
        if let Some((m, e)) = t.split_once("*2^") {
            let m: BigInt = m.trim().parse().map_err(|_| bad())?;
            let e: i64 = e.trim().parse().map_err(|_| bad())?;
            return Ok(Dyadic::new(m, e));
        }
        if let Some((n, d)) = t.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if !d.is_positive() {
                return Err(bad());
            }
            let g = n.gcd(&d);
            let d = &d / &g;
            let tz = d.trailing_zeros().unwrap_or(0);
            if d != BigInt::one() << tz as usize {
                return Err(Error::NotDyadic(s.to_string()));
            }
            return Ok(Dyadic::new(n / g, -(tz as i64)));
        }
        parse_decimal(t)
            .ok_or_else(bad)?
            .map_err(|()| Error::NotDyadic(s.to_string()))
    }
}

/// `None` on syntax errors, `Some(Err)` when the decimal is not dyadic.
fn parse_decimal(t: &str) -> Option<std::result::Result<Dyadic, ()>> {
    let (body, exp10) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i64>().ok()?),
        None => (t, 0),
    };
    let (neg, body) = match body.as_bytes().first()? {
        b'-' => (true, &body[1..]),
        b'+' => (false, &body[1..]),
        _ => (false, body),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let mut n: BigInt = digits.parse().ok()?;
    if neg {
        n = -n;
    }
    // value = n · 10^scale
    let scale = exp10 - frac_part.len() as i64;
    if scale.unsigned_abs() > 100_000 {
        return None;
    }
    if scale >= 0 {
        let p = num_traits::pow(BigInt::from(10), scale as usize);
        return Some(Ok(Dyadic::from_int(n * p)));
    }
    let k = (-scale) as usize;
    let five_k = num_traits::pow(BigInt::from(5), k);
    let (q, r) = n.div_rem(&five_k);
    if !r.is_zero() {
        return Some(Err(()));
    }
    Some(Ok(Dyadic::new(q, -(k as i64))))
}
