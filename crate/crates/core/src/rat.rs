//! Exact rational scalars and their text form.
//!
//! Every numeric quantity in this crate is an exact `BigRational`. The wire
//! form used in JSON payloads and reports is always `"num/den"` in lowest
//! terms with the sign on the numerator, for example `"4/1"` or `"-5/12"`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Exact rational number.
pub type Rat = BigRational;

/// Builds `n/d`. Panics if `d` is zero.
pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Formats a rational as `num/den` in lowest terms.
pub fn rat_str(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"num/den"` or a bare integer.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    let (n, d) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let pn: BigInt = n
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let pd: BigInt = d
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    if pd.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(pn, pd))
}

/// Converts a nonnegative `BigInt` to `u64`, reporting overflow.
pub fn to_u64(n: &BigInt) -> Result<u64> {
    u64::try_from(n).map_err(|_| {
        Error::InternalInconsistency(format!("integer {n} does not fit in 64 bits"))
    })
}
