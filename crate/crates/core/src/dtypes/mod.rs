//! Bit-exact software codecs for the low-precision scalar formats.
//!
//! Every format is described by a [`FloatFormat`] and stored as raw code
//! bits in a [`CodePoint`]. Six formats are built in:
//!
//! - `E4M3`: 8-bit, bias 7, no infinities, two NaN codes, max finite 448
//! - `E5M2`: 8-bit, bias 15, with infinities, max finite 57344
//! - `E3M2` / `E2M3`: 6-bit, no infinities or NaN
//! - `E2M1`: 4-bit, max finite 6
//! - `E8M0`: exponent-only power-of-two scale, code 255 is NaN
//!
//! Encoding is round-to-nearest-even with saturation on overflow by
//! default. Subnormals are fully supported in both directions.

mod codec;
mod nf4;
mod pack;

pub use codec::Codec;
pub use nf4::{nf4_decode, nf4_encode, Nf4Codebook};
pub use pack::{pack_int4, unpack_int4};

use crate::error::{Error, Result};

/// What `encode_float` does with a finite value whose magnitude exceeds
/// `max_finite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OverflowPolicy {
    /// Clamp to `max_finite` with the input's sign.
    Saturate,
    /// Produce the canonical NaN code.
    ToNan,
}

/// Parametric description of a low-precision float encoding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloatFormat {
    pub name: &'static str,
    pub exponent_bits: u32,
    pub mantissa_bits: u32,
    pub bias: i32,
    /// False only for the exponent-only scale format E8M0.
    pub has_sign_bit: bool,
    pub has_infinity: bool,
    /// Code values that decode to NaN; empty for formats without NaN.
    pub nan_codes: &'static [u8],
    pub max_finite: f32,
    pub overflow_policy: OverflowPolicy,
}

/// 8-bit float, 4 exponent / 3 mantissa bits, "FN" convention: no
/// infinities, codes 0x7F/0xFF are NaN, max finite 448.
pub static E4M3: FloatFormat = FloatFormat {
    name: "e4m3",
    exponent_bits: 4,
    mantissa_bits: 3,
    bias: 7,
    has_sign_bit: true,
    has_infinity: false,
    nan_codes: &[0x7f, 0xff],
    max_finite: 448.0,
    overflow_policy: OverflowPolicy::Saturate,
};

/// 8-bit float, 5 exponent / 2 mantissa bits, IEEE-style specials.
pub static E5M2: FloatFormat = FloatFormat {
    name: "e5m2",
    exponent_bits: 5,
    mantissa_bits: 2,
    bias: 15,
    has_sign_bit: true,
    has_infinity: true,
    nan_codes: &[0x7d, 0x7e, 0x7f, 0xfd, 0xfe, 0xff],
    max_finite: 57344.0,
    overflow_policy: OverflowPolicy::Saturate,
};

/// 6-bit float, 3 exponent / 2 mantissa bits, max finite 28.
pub static E3M2: FloatFormat = FloatFormat {
    name: "e3m2",
    exponent_bits: 3,
    mantissa_bits: 2,
    bias: 3,
    has_sign_bit: true,
    has_infinity: false,
    nan_codes: &[],
    max_finite: 28.0,
    overflow_policy: OverflowPolicy::Saturate,
};

/// 6-bit float, 2 exponent / 3 mantissa bits, max finite 7.5.
pub static E2M3: FloatFormat = FloatFormat {
    name: "e2m3",
    exponent_bits: 2,
    mantissa_bits: 3,
    bias: 1,
    has_sign_bit: true,
    has_infinity: false,
    nan_codes: &[],
    max_finite: 7.5,
    overflow_policy: OverflowPolicy::Saturate,
};

/// 4-bit float, 2 exponent / 1 mantissa bit, max finite 6.
pub static E2M1: FloatFormat = FloatFormat {
    name: "e2m1",
    exponent_bits: 2,
    mantissa_bits: 1,
    bias: 1,
    has_sign_bit: true,
    has_infinity: false,
    nan_codes: &[],
    max_finite: 6.0,
    overflow_policy: OverflowPolicy::Saturate,
};

/// Exponent-only scale format: codes 0..=254 decode to 2^(code-127),
/// code 255 is NaN. No sign bit.
pub static E8M0: FloatFormat = FloatFormat {
    name: "e8m0",
    exponent_bits: 8,
    mantissa_bits: 0,
    bias: 127,
    has_sign_bit: false,
    has_infinity: false,
    nan_codes: &[0xff],
    max_finite: 1.7014118e38, // 2^127
    overflow_policy: OverflowPolicy::Saturate,
};

/// All built-in formats.
pub fn registry() -> [&'static FloatFormat; 6] {
    [&E4M3, &E5M2, &E3M2, &E2M3, &E2M1, &E8M0]
}

/// Look up a built-in format by its serialized name.
pub fn format_by_name(name: &str) -> Result<&'static FloatFormat> {
    registry()
        .into_iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::Format(format!("unknown float format `{name}`")))
}

impl FloatFormat {
    /// Total storage bits: sign (if any) + exponent + mantissa.
    pub fn total_bits(&self) -> u32 {
        u32::from(self.has_sign_bit) + self.exponent_bits + self.mantissa_bits
    }

    /// Number of distinct codes.
    pub fn code_count(&self) -> usize {
        1usize << self.total_bits()
    }

    /// Largest exponent of a representable power of two:
    /// floor(log2(max_finite)).
    pub fn max_exponent(&self) -> i32 {
        if self.mantissa_bits == 0 && !self.has_sign_bit {
            // E8M0: top non-NaN code.
            return 254 - self.bias;
        }
        let top_exp_field = (1i32 << self.exponent_bits) - 1;
        top_exp_field - self.bias
    }

    /// The canonical NaN code, if the format has NaN at all.
    pub fn canonical_nan(&self) -> Option<u8> {
        self.nan_codes.iter().copied().max_by_key(|&c| {
            // Prefer the positive (sign bit clear) all-ones-mantissa code.
            if self.has_sign_bit && c >> (self.exponent_bits + self.mantissa_bits) == 1 {
                (0, c)
            } else {
                (1, c)
            }
        })
    }

    /// Shared codec (decode table + sorted encode grid) for this format.
    pub fn codec(&self) -> &'static Codec {
        codec::codec_for(self)
    }
}

/// A stored code value tagged with its format.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CodePoint {
    bits: u8,
    format: FloatFormat,
}

impl CodePoint {
    pub fn new(bits: u8, format: FloatFormat) -> Result<Self> {
        if usize::from(bits) >= format.code_count() {
            return Err(Error::Format(format!(
                "code {:#x} does not fit {} ({} bits)",
                bits,
                format.name,
                format.total_bits()
            )));
        }
        Ok(Self { bits, format })
    }

    pub fn bits(&self) -> u8 {
        self.bits
    }

    pub fn format(&self) -> &FloatFormat {
        &self.format
    }
}

/// Decode a code point to the exact real value it represents.
///
/// NaN codes return NaN; signed zero keeps its sign.
pub fn decode_float(code: CodePoint) -> f32 {
    code.format.codec().decode(code.bits)
}

/// Encode a real under round-to-nearest-even, ties to the even code.
///
/// Finite values beyond `max_finite` follow the format's overflow policy.
/// NaN maps to the canonical NaN code; for formats without NaN codes that
/// is a format error.
pub fn encode_float(x: f32, format: &FloatFormat) -> Result<CodePoint> {
    let bits = format.codec().encode(x)?;
    Ok(CodePoint {
        bits,
        format: *format,
    })
}

#[cfg(test)]
mod tests;
