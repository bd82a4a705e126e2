//! The eighteen Fibonacci/Lucas infinite product identities.
//!
//! Each identity is an infinite product whose k-th factor is
//!
//! ```text
//!   (X_k + C) / (X_k - C)                          plain
//!   (X_k + (-1)^(k-1) C) / (X_k + (-1)^k C)        alternating
//! ```
//!
//! where `X_k` is a Fibonacci number, a Lucas number or `√5·F` at an index
//! linear in `k`, and `C` is a constant of the same kind. The descriptor
//! carries the displayed closed form of the product and the two integers
//! `(p, m)` of the telescoping family that generates it; the family route
//! ([`family`]) supplies the finite-N boundary factor.

pub mod family;
mod table;
mod tail;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Error;
use crate::exactnum::GoldenExt;
use crate::fiblucas;

pub use family::Shift;
pub use tail::TailModel;

/// Largest `n`, `q` considered routine; bigger values work but grow quickly.
pub const DEFAULT_PARAM_LIMIT: u32 = 8;

/// Hard ceiling on `n`, `q` and `k`, keeping index arithmetic inside `i64`.
const MAX_ARGUMENT: u64 = 1_000_000;

/// `T<theorem>.<position>`, numbered by display order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdentityId {
    theorem: u8,
    position: u8,
}

impl IdentityId {
    const fn known(theorem: u8, position: u8) -> Self {
        Self { theorem, position }
    }

    pub fn new(theorem: u8, position: u8) -> Result<Self, Error> {
        let count = match theorem {
            1..=3 => 4,
            4 => 6,
            _ => 0,
        };
        if position == 0 || position > count {
            return Err(Error::UnknownIdentity(format!("T{theorem}.{position}")));
        }
        Ok(Self { theorem, position })
    }

    pub fn theorem(&self) -> u8 {
        self.theorem
    }

    pub fn position(&self) -> u8 {
        self.position
    }

    pub fn all() -> impl Iterator<Item = IdentityId> {
        list_identities().iter().map(|d| d.id)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}.{}", self.theorem, self.position)
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || Error::UnknownIdentity(s.to_string());
        let rest = s.strip_prefix(['T', 't']).ok_or_else(unknown)?;
        let (t, p) = rest.split_once('.').ok_or_else(unknown)?;
        let theorem = t.parse::<u8>().map_err(|_| unknown())?;
        let position = p.parse::<u8>().map_err(|_| unknown())?;
        Self::new(theorem, position).map_err(|_| unknown())
    }
}

impl Serialize for IdentityId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The positive integers `n` and `q` shared by every identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params {
    pub n: u32,
    pub q: u32,
}

impl Params {
    pub fn new(n: u32, q: u32) -> Result<Self, Error> {
        if n == 0 || q == 0 {
            return Err(Error::InvalidParams(format!("n and q must be positive (got n={n}, q={q})")));
        }
        if u64::from(n.max(q)) > MAX_ARGUMENT {
            return Err(Error::InvalidParams(format!("n and q must not exceed {MAX_ARGUMENT}")));
        }
        Ok(Self { n, q })
    }

    /// True when either parameter is above [`DEFAULT_PARAM_LIMIT`].
    pub fn beyond_default_range(&self) -> bool {
        self.n > DEFAULT_PARAM_LIMIT || self.q > DEFAULT_PARAM_LIMIT
    }

    fn ints(&self) -> (i64, i64) {
        (i64::from(self.n), i64::from(self.q))
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}, q={}", self.n, self.q)
    }
}

/// Which integer sequence a factor quantity is drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Seq {
    Fib,
    Lucas,
    /// `√5 · F_j`
    Sqrt5Fib,
}

impl Seq {
    pub fn eval(self, index: i64) -> Result<GoldenExt, Error> {
        Ok(match self {
            Seq::Fib => GoldenExt::from_integer(fiblucas::fib(index)?),
            Seq::Lucas => GoldenExt::from_integer(fiblucas::lucas(index)?),
            Seq::Sqrt5Fib => {
                let f: BigInt = fiblucas::fib(index)?;
                GoldenExt::new(Default::default(), f.into())
            }
        })
    }

    /// `d` such that the value at index `j >= 1` is at least `φ^(j - d)`:
    /// `F_j >= φ^(j-2)`, `L_j >= φ^(j-1)`, and `√5 F_j >= φ^(j-1)` since `√5 > φ`.
    pub fn lower_bound_shift(self) -> i64 {
        match self {
            Seq::Fib => 2,
            Seq::Lucas | Seq::Sqrt5Fib => 1,
        }
    }

    fn render(self, index: &str) -> String {
        match self {
            Seq::Fib => format!("F[{index}]"),
            Seq::Lucas => format!("L[{index}]"),
            Seq::Sqrt5Fib => format!("√5 F[{index}]"),
        }
    }
}

/// `X_k`, the quantity that grows with `k`.
#[derive(Clone, Copy)]
pub(crate) struct Growing {
    pub seq: Seq,
    pub text: &'static str,
    pub index: fn(i64, i64, i64) -> i64,
}

/// `C`, the fixed quantity added to or subtracted from `X_k`.
#[derive(Clone, Copy)]
pub(crate) struct Constant {
    pub seq: Seq,
    pub text: &'static str,
    pub index: fn(i64, i64) -> i64,
}

/// One catalog entry.
#[derive(Clone, Copy)]
pub struct IdentityDescriptor {
    pub id: IdentityId,
    pub shift: Shift,
    pub alternating: bool,
    pub p_text: &'static str,
    pub m_text: &'static str,
    pub rhs_text: &'static str,
    pub(crate) p_of: fn(i64) -> i64,
    pub(crate) m_of: fn(i64) -> i64,
    pub(crate) growing: Growing,
    pub(crate) constant: Constant,
    pub(crate) rhs: fn(i64, i64) -> Result<GoldenExt, Error>,
}

impl fmt::Debug for IdentityDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityDescriptor")
            .field("id", &self.id)
            .field("shift", &self.shift)
            .field("alternating", &self.alternating)
            .field("p", &self.p_text)
            .field("m", &self.m_text)
            .finish()
    }
}

impl IdentityDescriptor {
    pub fn theorem(&self) -> u8 {
        self.id.theorem
    }

    /// Family label such as `even-shift/alternating`.
    pub fn family_label(&self) -> String {
        format!(
            "{}/{}",
            self.shift.label(),
            if self.alternating { "alternating" } else { "plain" }
        )
    }

    pub fn p(&self, params: Params) -> i64 {
        (self.p_of)(params.ints().0)
    }

    pub fn m(&self, params: Params) -> i64 {
        (self.m_of)(params.ints().1)
    }

    pub fn family(&self, params: Params) -> family::Family {
        family::Family {
            shift: self.shift,
            alternating: self.alternating,
            p: self.p(params),
            m: self.m(params),
        }
    }

    /// Index of `X_k`.
    pub fn growing_index(&self, params: Params, k: u64) -> Result<i64, Error> {
        let k = checked_k(k)?;
        let (n, q) = params.ints();
        Ok((self.growing.index)(n, q, k))
    }

    pub fn constant_index(&self, params: Params) -> i64 {
        let (n, q) = params.ints();
        (self.constant.index)(n, q)
    }

    pub fn growing_seq(&self) -> Seq {
        self.growing.seq
    }

    pub fn constant_seq(&self) -> Seq {
        self.constant.seq
    }

    pub fn constant_value(&self, params: Params) -> Result<GoldenExt, Error> {
        self.constant.seq.eval(self.constant_index(params))
    }

    /// Numerator and denominator of the k-th factor, unreduced.
    pub fn lhs_term_parts(&self, params: Params, k: u64) -> Result<(GoldenExt, GoldenExt), Error> {
        if k == 0 {
            return Err(Error::InvalidParams("factor index k starts at 1".into()));
        }
        let x = self.growing.seq.eval(self.growing_index(params, k)?)?;
        let c = self.constant_value(params)?;
        let plus_first = !self.alternating || k % 2 == 1;
        let (num, den) = if plus_first {
            (&x + &c, &x - &c)
        } else {
            (&x - &c, &x + &c)
        };
        if den.is_zero() {
            return Err(Error::ZeroDenominator { id: self.id, params, k });
        }
        Ok((num, den))
    }

    /// The k-th factor of the infinite product, `k >= 1`.
    pub fn lhs_term(&self, params: Params, k: u64) -> Result<GoldenExt, Error> {
        let (num, den) = self.lhs_term_parts(params, k)?;
        Ok(num.checked_div(&den)?)
    }

    /// The displayed closed-form value of the infinite product.
    pub fn rhs_closed_form(&self, params: Params) -> Result<GoldenExt, Error> {
        let (n, q) = params.ints();
        (self.rhs)(n, q)
    }

    /// `B(N)` with `P_N = RHS · B(N)^σ`, see [`IdentityDescriptor::boundary_sign`].
    pub fn boundary_factor(&self, params: Params, big_n: u64) -> Result<GoldenExt, Error> {
        self.family(params).boundary_factor(checked_k(big_n)?)
    }

    /// `σ`: `+1` for plain identities, `(-1)^(N-1)` for alternating ones.
    pub fn boundary_sign(&self, big_n: u64) -> i64 {
        if self.alternating && big_n.is_multiple_of(2) {
            -1
        } else {
            1
        }
    }

    pub fn tail_model(&self, params: Params) -> Result<TailModel, Error> {
        TailModel::for_identity(self, params)
    }

    /// The k-th factor written out, e.g. `(F[..] + F[..]) / (F[..] - F[..])`.
    pub fn lhs_text(&self) -> String {
        let x = self.growing.seq.render(self.growing.text);
        let c = self.constant.seq.render(self.constant.text);
        if self.alternating {
            format!("prod_{{k>=1}} ({x} + (-1)^(k-1) {c}) / ({x} + (-1)^k {c})")
        } else {
            format!("prod_{{k>=1}} ({x} + {c}) / ({x} - {c})")
        }
    }
}

fn checked_k(k: u64) -> Result<i64, Error> {
    if k > MAX_ARGUMENT {
        return Err(Error::InvalidParams(format!("k and N must not exceed {MAX_ARGUMENT}")));
    }
    Ok(k as i64)
}

/// All eighteen descriptors in the order T1.1 ... T4.6.
pub fn list_identities() -> &'static [IdentityDescriptor] {
    &table::CATALOG
}

pub fn descriptor(id: IdentityId) -> &'static IdentityDescriptor {
    list_identities()
        .iter()
        .find(|d| d.id == id)
        .expect("every constructible IdentityId is in the catalog")
}

pub fn lhs_term(id: IdentityId, params: Params, k: u64) -> Result<GoldenExt, Error> {
    descriptor(id).lhs_term(params, k)
}

pub fn rhs_closed_form(id: IdentityId, params: Params) -> Result<GoldenExt, Error> {
    descriptor(id).rhs_closed_form(params)
}

pub fn boundary_factor(id: IdentityId, params: Params, big_n: u64) -> Result<GoldenExt, Error> {
    descriptor(id).boundary_factor(params, big_n)
}

pub fn tail_model(id: IdentityId, params: Params) -> Result<TailModel, Error> {
    descriptor(id).tail_model(params)
}

#[derive(Serialize)]
struct CatalogEntry {
    id: IdentityId,
    theorem: u8,
    family: String,
    p: &'static str,
    m: &'static str,
    alternating: bool,
    lhs: String,
    rhs: &'static str,
}

/// Catalog metadata as a pretty-printed JSON array.
pub fn catalog_json() -> String {
    let entries: Vec<CatalogEntry> = list_identities()
        .iter()
        .map(|d| CatalogEntry {
            id: d.id,
            theorem: d.theorem(),
            family: d.family_label(),
            p: d.p_text,
            m: d.m_text,
            alternating: d.alternating,
            lhs: d.lhs_text(),
            rhs: d.rhs_text,
        })
        .collect();
    serde_json::to_string_pretty(&entries).expect("catalog metadata serializes")
}
