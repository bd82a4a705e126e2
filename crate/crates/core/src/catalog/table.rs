//! The identity table. Factor indices and closed forms are written exactly as
//! displayed; `p` and `m` name the family member each identity comes from.

use std::ops::RangeInclusive;

use super::family::Shift;
use super::{Constant, Growing, IdentityDescriptor, IdentityId, Seq};
use crate::error::Error;
use crate::exactnum::{GoldenExt, Rational};
use crate::fiblucas;

type Value = Result<GoldenExt, Error>;

fn f(i: i64) -> Value {
    Ok(GoldenExt::from_integer(fiblucas::fib(i)?))
}

fn l(i: i64) -> Value {
    Ok(GoldenExt::from_integer(fiblucas::lucas(i)?))
}

/// `F_i √5 + 2`
fn f_sqrt5_plus_2(i: i64) -> Value {
    Ok(GoldenExt::new(Rational::from_integer(2), fiblucas::fib(i)?.into()))
}

fn ratio(num: Value, den: Value) -> Value {
    Ok(num?.checked_div(&den?)?)
}

fn sqrt5_pow(e: i64) -> Value {
    Ok(GoldenExt::sqrt5().pow(e)?)
}

/// Empty ranges give 1.
fn prod(range: RangeInclusive<i64>, mut term: impl FnMut(i64) -> Value) -> Value {
    let mut acc = GoldenExt::one();
    for k in range {
        acc = &acc * &term(k)?;
    }
    Ok(acc)
}

fn rhs_1_1(n: i64, q: i64) -> Value {
    let a = prod(1..=q, |k| ratio(f((2 * k - 1) * (2 * n - 1)), l((2 * k - 1) * (2 * n - 1))))?;
    let b = prod(1..=q - 1, |k| ratio(l(2 * k * (2 * n - 1)), f(2 * k * (2 * n - 1))))?;
    Ok(GoldenExt::sqrt5() * a * b)
}

fn rhs_1_2(n: i64, q: i64) -> Value {
    let a = prod(1..=2 * q - 1, |k| ratio(l(2 * n * k), f(2 * n * k)))?;
    Ok(sqrt5_pow(-(2 * q - 1))? * a)
}

fn rhs_1_3(n: i64, q: i64) -> Value {
    let a = prod(1..=2 * q, |k| ratio(l(2 * n * k), f(2 * n * k)))?;
    Ok(GoldenExt::from_integer(5).pow(-q)? * a)
}

fn rhs_1_4(n: i64, q: i64) -> Value {
    let p = 2 * n - 1;
    prod(1..=q, |k| {
        ratio(
            Ok(f(p * (2 * k - 1))? * l(p * 2 * k)?),
            Ok(l(p * (2 * k - 1))? * f(p * 2 * k)?),
        )
    })
}

fn rhs_2_1(n: i64, q: i64) -> Value {
    let a = prod(1..=q, |k| ratio(l(2 * n * (2 * k - 1)), f(2 * n * (2 * k - 1))))?;
    Ok(sqrt5_pow(-q)? * a)
}

fn rhs_2_2(n: i64, q: i64) -> Value {
    let p = 2 * n - 1;
    let a = prod(1..=q, |k| ratio(f(p * (2 * k - 1)), l(p * (2 * k - 1))))?;
    Ok(sqrt5_pow(q)? * a)
}

fn rhs_2_3(n: i64, q: i64) -> Value {
    let p = 2 * n - 1;
    prod(1..=2 * q, |k| ratio(f_sqrt5_plus_2((2 * k - 1) * p), l((2 * k - 1) * p)))
}

fn rhs_2_4(n: i64, q: i64) -> Value {
    let p = 2 * n - 1;
    prod(1..=2 * q - 1, |k| ratio(f_sqrt5_plus_2((2 * k - 1) * p), l((2 * k - 1) * p)))
}

fn rhs_3_1(n: i64, q: i64) -> Value {
    prod(1..=q, |k| {
        ratio(
            Ok(l(2 * n * (2 * k - 1))? * f(4 * n * k)?),
            Ok(f(2 * n * (2 * k - 1))? * l(4 * n * k)?),
        )
    })
}

fn rhs_3_2(n: i64, q: i64) -> Value {
    let p = 2 * n - 1;
    let a = prod(1..=q, |k| {
        ratio(
            Ok(f(p * (2 * k - 1))? * f(p * 2 * k)?),
            Ok(l(p * (2 * k - 1))? * l(p * 2 * k)?),
        )
    })?;
    Ok(GoldenExt::from_integer(5).pow(q)? * a)
}

fn rhs_3_3(n: i64, q: i64) -> Value {
    let a = prod(1..=q, |k| ratio(l(2 * n * (2 * k - 1)), f(2 * n * (2 * k - 1))))?;
    let b = prod(1..=q - 1, |k| ratio(f(4 * n * k), l(4 * n * k)))?;
    Ok(sqrt5_pow(-1)? * a * b)
}

fn rhs_3_4(n: i64, q: i64) -> Value {
    let p = 2 * n - 1;
    let a = prod(1..=q, |k| ratio(f(p * (2 * k - 1)), l(p * (2 * k - 1))))?;
    let b = prod(1..=q - 1, |k| ratio(f(p * 2 * k), l(p * 2 * k)))?;
    Ok(sqrt5_pow(2 * q - 1)? * a * b)
}

fn rhs_4_1(n: i64, q: i64) -> Value {
    prod(1..=q, |k| {
        ratio(
            Ok(l(2 * n * (4 * k - 3))? * f(2 * n * (4 * k - 1))?),
            Ok(f(2 * n * (4 * k - 3))? * l(2 * n * (4 * k - 1))?),
        )
    })
}

fn rhs_4_2(n: i64, q: i64) -> Value {
    let p = 2 * n - 1;
    prod(1..=q, |k| {
        ratio(
            Ok(f(p * (4 * k - 3))? * l(p * (4 * k - 1))?),
            Ok(l(p * (4 * k - 3))? * f(p * (4 * k - 1))?),
        )
    })
}

fn rhs_4_3(n: i64, q: i64) -> Value {
    let p = 2 * n - 1;
    prod(1..=q, |k| {
        ratio(
            Ok(f_sqrt5_plus_2(p * (4 * k - 3))? * l(p * (4 * k - 1))?),
            Ok(f_sqrt5_plus_2(p * (4 * k - 1))? * l(p * (4 * k - 3))?),
        )
    })
}

fn rhs_4_4(n: i64, q: i64) -> Value {
    let a = prod(1..=q, |k| ratio(l(2 * n * (4 * k - 3)), f(2 * n * (4 * k - 3))))?;
    let b = prod(1..=q - 1, |k| ratio(f(2 * n * (4 * k - 1)), l(2 * n * (4 * k - 1))))?;
    Ok(sqrt5_pow(-1)? * a * b)
}

fn rhs_4_5(n: i64, q: i64) -> Value {
    let p = 2 * n - 1;
    let a = prod(1..=q, |k| ratio(f(p * (4 * k - 3)), l(p * (4 * k - 3))))?;
    let b = prod(1..=q - 1, |k| ratio(l(p * (4 * k - 1)), f(p * (4 * k - 1))))?;
    Ok(GoldenExt::sqrt5() * a * b)
}

fn rhs_4_6(n: i64, q: i64) -> Value {
    let p = 2 * n - 1;
    let a = prod(1..=q, |k| ratio(f_sqrt5_plus_2(p * (4 * k - 3)), l(p * (4 * k - 3))))?;
    let b = prod(1..=q - 1, |k| ratio(l(p * (4 * k - 1)), f_sqrt5_plus_2(p * (4 * k - 1))))?;
    Ok(a * b)
}

pub(super) static CATALOG: [IdentityDescriptor; 18] = [
    // even shift, plain
    IdentityDescriptor {
        id: IdentityId::known(1, 1),
        shift: Shift::Even,
        alternating: false,
        p_text: "2n-1",
        m_text: "2q-1",
        rhs_text: "√5 prod_{k=1..q} F[(2k-1)(2n-1)]/L[(2k-1)(2n-1)] prod_{k=1..q-1} L[2k(2n-1)]/F[2k(2n-1)]",
        p_of: |n| 2 * n - 1,
        m_of: |q| 2 * q - 1,
        growing: Growing { seq: Seq::Lucas, text: "(2n-1)(2k+2q-1)", index: |n, q, k| (2 * n - 1) * (2 * k + 2 * q - 1) },
        constant: Constant { seq: Seq::Lucas, text: "(2n-1)(2q-1)", index: |n, q| (2 * n - 1) * (2 * q - 1) },
        rhs: rhs_1_1,
    },
    IdentityDescriptor {
        id: IdentityId::known(1, 2),
        shift: Shift::Even,
        alternating: false,
        p_text: "2n",
        m_text: "2q-1",
        rhs_text: "(√5)^-(2q-1) prod_{k=1..2q-1} L[2nk]/F[2nk]",
        p_of: |n| 2 * n,
        m_of: |q| 2 * q - 1,
        growing: Growing { seq: Seq::Fib, text: "2n(2k+2q-1)", index: |n, q, k| 2 * n * (2 * k + 2 * q - 1) },
        constant: Constant { seq: Seq::Fib, text: "2n(2q-1)", index: |n, q| 2 * n * (2 * q - 1) },
        rhs: rhs_1_2,
    },
    IdentityDescriptor {
        id: IdentityId::known(1, 3),
        shift: Shift::Even,
        alternating: false,
        p_text: "2n",
        m_text: "2q",
        rhs_text: "5^-q prod_{k=1..2q} L[2nk]/F[2nk]",
        p_of: |n| 2 * n,
        m_of: |q| 2 * q,
        growing: Growing { seq: Seq::Fib, text: "4n(k+q)", index: |n, q, k| 4 * n * (k + q) },
        constant: Constant { seq: Seq::Fib, text: "4nq", index: |n, q| 4 * n * q },
        rhs: rhs_1_3,
    },
    IdentityDescriptor {
        id: IdentityId::known(1, 4),
        shift: Shift::Even,
        alternating: false,
        p_text: "2n-1",
        m_text: "2q",
        rhs_text: "prod_{k=1..q} F[(2n-1)(2k-1)] L[(2n-1)2k] / (L[(2n-1)(2k-1)] F[(2n-1)2k])",
        p_of: |n| 2 * n - 1,
        m_of: |q| 2 * q,
        growing: Growing { seq: Seq::Fib, text: "(2n-1)(2k+2q)", index: |n, q, k| (2 * n - 1) * (2 * k + 2 * q) },
        constant: Constant { seq: Seq::Fib, text: "2q(2n-1)", index: |n, q| 2 * q * (2 * n - 1) },
        rhs: rhs_1_4,
    },
    // odd shift, plain
    IdentityDescriptor {
        id: IdentityId::known(2, 1),
        shift: Shift::Odd,
        alternating: false,
        p_text: "4n",
        m_text: "q",
        rhs_text: "(√5)^-q prod_{k=1..q} L[2n(2k-1)]/F[2n(2k-1)]",
        p_of: |n| 4 * n,
        m_of: |q| q,
        growing: Growing { seq: Seq::Fib, text: "4n(2k+q-1)", index: |n, q, k| 4 * n * (2 * k + q - 1) },
        constant: Constant { seq: Seq::Fib, text: "4nq", index: |n, q| 4 * n * q },
        rhs: rhs_2_1,
    },
    IdentityDescriptor {
        id: IdentityId::known(2, 2),
        shift: Shift::Odd,
        alternating: false,
        p_text: "4n-2",
        m_text: "q",
        rhs_text: "(√5)^q prod_{k=1..q} F[(2n-1)(2k-1)]/L[(2n-1)(2k-1)]",
        p_of: |n| 4 * n - 2,
        m_of: |q| q,
        growing: Growing { seq: Seq::Fib, text: "(4n-2)(2k+q-1)", index: |n, q, k| (4 * n - 2) * (2 * k + q - 1) },
        constant: Constant { seq: Seq::Fib, text: "2q(2n-1)", index: |n, q| 2 * q * (2 * n - 1) },
        rhs: rhs_2_2,
    },
    IdentityDescriptor {
        id: IdentityId::known(2, 3),
        shift: Shift::Odd,
        alternating: false,
        p_text: "2n-1",
        m_text: "2q",
        rhs_text: "prod_{k=1..2q} (F[(2k-1)(2n-1)] √5 + 2)/L[(2k-1)(2n-1)]",
        p_of: |n| 2 * n - 1,
        m_of: |q| 2 * q,
        growing: Growing { seq: Seq::Lucas, text: "(2k-1+2q)(2n-1)", index: |n, q, k| (2 * k - 1 + 2 * q) * (2 * n - 1) },
        constant: Constant { seq: Seq::Sqrt5Fib, text: "2q(2n-1)", index: |n, q| 2 * q * (2 * n - 1) },
        rhs: rhs_2_3,
    },
    IdentityDescriptor {
        id: IdentityId::known(2, 4),
        shift: Shift::Odd,
        alternating: false,
        p_text: "2n-1",
        m_text: "2q-1",
        rhs_text: "prod_{k=1..2q-1} (F[(2k-1)(2n-1)] √5 + 2)/L[(2k-1)(2n-1)]",
        p_of: |n| 2 * n - 1,
        m_of: |q| 2 * q - 1,
        growing: Growing { seq: Seq::Sqrt5Fib, text: "2(2n-1)(k+q-1)", index: |n, q, k| 2 * (2 * n - 1) * (k + q - 1) },
        constant: Constant { seq: Seq::Lucas, text: "(2n-1)(2q-1)", index: |n, q| (2 * n - 1) * (2 * q - 1) },
        rhs: rhs_2_4,
    },
    // even shift, alternating
    IdentityDescriptor {
        id: IdentityId::known(3, 1),
        shift: Shift::Even,
        alternating: true,
        p_text: "2n",
        m_text: "2q",
        rhs_text: "prod_{k=1..q} L[2n(2k-1)] F[4nk] / (F[2n(2k-1)] L[4nk])",
        p_of: |n| 2 * n,
        m_of: |q| 2 * q,
        growing: Growing { seq: Seq::Fib, text: "4nq+4nk", index: |n, q, k| 4 * n * q + 4 * n * k },
        constant: Constant { seq: Seq::Fib, text: "4nq", index: |n, q| 4 * n * q },
        rhs: rhs_3_1,
    },
    IdentityDescriptor {
        id: IdentityId::known(3, 2),
        shift: Shift::Even,
        alternating: true,
        p_text: "2n-1",
        m_text: "2q",
        rhs_text: "5^q prod_{k=1..q} F[(2n-1)(2k-1)] F[(2n-1)2k] / (L[(2n-1)(2k-1)] L[(2n-1)2k])",
        p_of: |n| 2 * n - 1,
        m_of: |q| 2 * q,
        growing: Growing { seq: Seq::Fib, text: "(2n-1)(2q+2k)", index: |n, q, k| (2 * n - 1) * (2 * q + 2 * k) },
        constant: Constant { seq: Seq::Fib, text: "(2n-1)2q", index: |n, q| (2 * n - 1) * 2 * q },
        rhs: rhs_3_2,
    },
    IdentityDescriptor {
        id: IdentityId::known(3, 3),
        shift: Shift::Even,
        alternating: true,
        p_text: "2n",
        m_text: "2q-1",
        rhs_text: "(1/√5) prod_{k=1..q} L[2n(2k-1)]/F[2n(2k-1)] prod_{k=1..q-1} F[4nk]/L[4nk]",
        p_of: |n| 2 * n,
        m_of: |q| 2 * q - 1,
        growing: Growing { seq: Seq::Lucas, text: "4nk+4nq-2n", index: |n, q, k| 4 * n * k + 4 * n * q - 2 * n },
        constant: Constant { seq: Seq::Lucas, text: "4nq-2n", index: |n, q| 4 * n * q - 2 * n },
        rhs: rhs_3_3,
    },
    IdentityDescriptor {
        id: IdentityId::known(3, 4),
        shift: Shift::Even,
        alternating: true,
        p_text: "2n-1",
        m_text: "2q-1",
        rhs_text: "(√5)^(2q-1) prod_{k=1..q} F[(2n-1)(2k-1)]/L[(2n-1)(2k-1)] prod_{k=1..q-1} F[(2n-1)2k]/L[(2n-1)2k]",
        p_of: |n| 2 * n - 1,
        m_of: |q| 2 * q - 1,
        growing: Growing { seq: Seq::Fib, text: "(2n-1)(2q+2k-1)", index: |n, q, k| (2 * n - 1) * (2 * q + 2 * k - 1) },
        constant: Constant { seq: Seq::Fib, text: "(2n-1)(2q-1)", index: |n, q| (2 * n - 1) * (2 * q - 1) },
        rhs: rhs_3_4,
    },
    // odd shift, alternating
    IdentityDescriptor {
        id: IdentityId::known(4, 1),
        shift: Shift::Odd,
        alternating: true,
        p_text: "4n",
        m_text: "2q",
        rhs_text: "prod_{k=1..q} L[2n(4k-3)] F[2n(4k-1)] / (F[2n(4k-3)] L[2n(4k-1)])",
        p_of: |n| 4 * n,
        m_of: |q| 2 * q,
        growing: Growing { seq: Seq::Fib, text: "8nk+8nq-4n", index: |n, q, k| 8 * n * k + 8 * n * q - 4 * n },
        constant: Constant { seq: Seq::Fib, text: "8nq", index: |n, q| 8 * n * q },
        rhs: rhs_4_1,
    },
    IdentityDescriptor {
        id: IdentityId::known(4, 2),
        shift: Shift::Odd,
        alternating: true,
        p_text: "4n-2",
        m_text: "2q",
        rhs_text: "prod_{k=1..q} F[(2n-1)(4k-3)] L[(2n-1)(4k-1)] / (L[(2n-1)(4k-3)] F[(2n-1)(4k-1)])",
        p_of: |n| 4 * n - 2,
        m_of: |q| 2 * q,
        growing: Growing { seq: Seq::Fib, text: "(4n-2)(2q+2k-1)", index: |n, q, k| (4 * n - 2) * (2 * q + 2 * k - 1) },
        constant: Constant { seq: Seq::Fib, text: "(2n-1)4q", index: |n, q| (2 * n - 1) * 4 * q },
        rhs: rhs_4_2,
    },
    IdentityDescriptor {
        id: IdentityId::known(4, 3),
        shift: Shift::Odd,
        alternating: true,
        p_text: "2n-1",
        m_text: "2q",
        rhs_text: "prod_{k=1..q} (F[(2n-1)(4k-3)] √5 + 2) L[(2n-1)(4k-1)] / ((F[(2n-1)(4k-1)] √5 + 2) L[(2n-1)(4k-3)])",
        p_of: |n| 2 * n - 1,
        m_of: |q| 2 * q,
        growing: Growing { seq: Seq::Lucas, text: "(2n-1)(2q+2k-1)", index: |n, q, k| (2 * n - 1) * (2 * q + 2 * k - 1) },
        constant: Constant { seq: Seq::Sqrt5Fib, text: "(2n-1)2q", index: |n, q| (2 * n - 1) * 2 * q },
        rhs: rhs_4_3,
    },
    IdentityDescriptor {
        id: IdentityId::known(4, 4),
        shift: Shift::Odd,
        alternating: true,
        p_text: "4n",
        m_text: "2q-1",
        rhs_text: "(1/√5) prod_{k=1..q} L[2n(4k-3)]/F[2n(4k-3)] prod_{k=1..q-1} F[2n(4k-1)]/L[2n(4k-1)]",
        p_of: |n| 4 * n,
        m_of: |q| 2 * q - 1,
        growing: Growing { seq: Seq::Lucas, text: "8n(k+q-1)", index: |n, q, k| 8 * n * (k + q - 1) },
        constant: Constant { seq: Seq::Lucas, text: "4n(2q-1)", index: |n, q| 4 * n * (2 * q - 1) },
        rhs: rhs_4_4,
    },
    IdentityDescriptor {
        id: IdentityId::known(4, 5),
        shift: Shift::Odd,
        alternating: true,
        p_text: "4n-2",
        m_text: "2q-1",
        rhs_text: "√5 prod_{k=1..q} F[(2n-1)(4k-3)]/L[(2n-1)(4k-3)] prod_{k=1..q-1} L[(2n-1)(4k-1)]/F[(2n-1)(4k-1)]",
        p_of: |n| 4 * n - 2,
        m_of: |q| 2 * q - 1,
        growing: Growing { seq: Seq::Lucas, text: "(8n-4)(k+q-1)", index: |n, q, k| (8 * n - 4) * (k + q - 1) },
        constant: Constant { seq: Seq::Lucas, text: "(4n-2)(2q-1)", index: |n, q| (4 * n - 2) * (2 * q - 1) },
        rhs: rhs_4_5,
    },
    IdentityDescriptor {
        id: IdentityId::known(4, 6),
        shift: Shift::Odd,
        alternating: true,
        p_text: "2n-1",
        m_text: "2q-1",
        rhs_text: "prod_{k=1..q} (F[(2n-1)(4k-3)] √5 + 2)/L[(2n-1)(4k-3)] prod_{k=1..q-1} L[(2n-1)(4k-1)]/(F[(2n-1)(4k-1)] √5 + 2)",
        p_of: |n| 2 * n - 1,
        m_of: |q| 2 * q - 1,
        growing: Growing { seq: Seq::Lucas, text: "(4n-2)(q+k-1)", index: |n, q, k| (4 * n - 2) * (q + k - 1) },
        constant: Constant { seq: Seq::Sqrt5Fib, text: "(2n-1)(2q-1)", index: |n, q| (2 * n - 1) * (2 * q - 1) },
        rhs: rhs_4_6,
    },
];

#[cfg(test)]
mod tests {
    use super::super::{list_identities, Params};

    /// The displayed term and closed form agree with the family route built
    /// from `(p, m)` alone.
    #[test]
    fn displays_match_their_family() {
        for d in list_identities() {
            for n in 1..=3 {
                for q in 1..=3 {
                    let params = Params::new(n, q).unwrap();
                    let fam = d.family(params);
                    assert_eq!(
                        d.rhs_closed_form(params).unwrap(),
                        fam.limit_value().unwrap(),
                        "{} rhs at {params}",
                        d.id
                    );
                    for k in 1..=4u64 {
                        assert_eq!(
                            d.lhs_term(params, k).unwrap(),
                            fam.term(k as i64).unwrap(),
                            "{} term k={k} at {params}",
                            d.id
                        );
                    }
                }
            }
        }
    }
}
