//! Stored expressions. Leading unary minus binds tighter than `^` in the
//! expression grammar, so negated monomials are written `-1*v^k`.

use super::{AlgebraKind, Rho};

pub(crate) struct HilbertText {
    /// Every displayed form of the numerator; all must agree.
    pub numerator: &'static [&'static str],
    /// Expanded product of binomials, then the factored form.
    pub denominator: &'static [&'static str],
}

pub(crate) const PURE_HILBERT: HilbertText = HilbertText {
    numerator: &[
        "(1-x*y+(x*y)^2)*(1-(x+y)*(x*y)+(x+y)*(x*y)^2+(x+y)^2*(x*y)^2+(x+y)*(x*y)^3-(x+y)*(x*y)^4+(x*y)^6)",
        "(1-x*y+(x*y)^2)*((1+(x*y)^3)^2-(x+y)*(x*y)*(1-x*y)^2*(1+x*y)+(x^2+y^2)*(x*y)^2)",
    ],
    denominator: &[
        "(1-x)*(1-x^2)*(1-x^3)*(1-x^4)*(1-y)*(1-y^2)*(1-y^3)*(1-y^4)\
         *(1-x*y)^2*(1-x^2*y)^2*(1-x*y^2)^2*(1-x^3*y)*(1-x*y^3)*(1-x^2*y^2)",
        "(1-x*y)^3*(1+x*y)*(1-x)^4*(1+x)^2*(1+x+x^2)*(1+x^2)*(1-x*y*x)^2*(1-x*y*x^2)\
         *(1-y)^4*(1+y)^2*(1+y+y^2)*(1+y^2)*(1-x*y*y)^2*(1-x*y*y^2)",
    ],
};

pub(crate) const MIXED_HILBERT: HilbertText = HilbertText {
    numerator: &["1+(x*y)^2+(x*y)^3+(x*y)^5+(x+y)*(x*y)^2"],
    denominator: &[
        "(1-x)^2*(1-x^2)*(1-x^3)*(1-y)^2*(1-y^2)*(1-y^3)\
         *(1-x*y)^2*(1-x^2*y)^2*(1-x*y^2)^2*(1-x^3*y)*(1-x*y^3)*(1-x^2*y^2)",
        "(1-x*y)^3*(1+x*y)*(1-x)^4*(1+x)*(1+x+x^2)*(1-x*y*x)^2*(1-x*y*x^2)\
         *(1-y)^4*(1+y)*(1+y+y^2)*(1-x*y*y)^2*(1-x*y*y^2)",
    ],
};

/// `q(x, z)` with `z` written as `v`, so that `Q(x, y) = (1 - xy)^3 (1 + xy) q(x, xy) q(y, xy)`.
pub(crate) const PURE_Q: &str = "(1-x)^4*(1+x)^2*(1+x+x^2)*(1+x^2)*(1-v*x)^2*(1-v*x^2)";
pub(crate) const MIXED_Q: &str = "(1-x)^4*(1+x)*(1+x+x^2)*(1-v*x)^2*(1-v*x^2)";
pub(crate) const Z_FACTOR: &str = "1/((1-v)^3*(1+v))";

/// One stored slot: the coefficient of `t^index / rho^power`.
pub(crate) struct SlotText {
    pub name: &'static str,
    pub rho: Rho,
    pub power: u32,
    pub index: u32,
    pub text: &'static str,
}

const fn slot(name: &'static str, rho: Rho, power: u32, index: u32, text: &'static str) -> SlotText {
    SlotText { name, rho, power, index, text }
}

const GAMMA_0: &str = "(1+2*v)/(9*(1-v)^4*(1+v)*(1+v+v^2)^5*(1-v+v^2))";
const GAMMA_1: &str = "1/(9*(1-v)^3*(1+v+v^2)^5*(1-v+v^2))";

pub(crate) const PURE_SLOTS: &[SlotText] = &[
    slot(
        "alpha_4",
        Rho::OneMinusT,
        4,
        0,
        "(1-v+v^2)*(1-v+v^2+4*v^3+v^4-v^5+v^6)/(24*(1-v)^12*(1+v)^5*(1+v+v^2)^2*(1+v^2))",
    ),
    slot(
        "alpha_3",
        Rho::OneMinusT,
        3,
        0,
        "(1+v+v^2)*(1-v+v^2)*(3-4*v-v^2+4*v^3-3*v^4-20*v^5-12*v^6-12*v^7+7*v^8+12*v^9+v^10-4*v^11+5*v^12)\
         /(24*(1-v)^13*(1+v)^6*(1+v+v^2)^4*(1+v^2)^2)",
    ),
    slot(
        "alpha_2",
        Rho::OneMinusT,
        2,
        0,
        "(1-v+v^2)*(59-97*v-26*v^2+223*v^3+675*v^4+840*v^5+2501*v^6+4049*v^7+6799*v^8+7754*v^9\
         +6367*v^10+3473*v^11+2189*v^12+768*v^13+747*v^14+271*v^15-26*v^16-97*v^17+107*v^18)\
         /(288*(1-v)^14*(1+v)^7*(1+v+v^2)^4*(1+v^2)^3)",
    ),
    slot(
        "alpha_1",
        Rho::OneMinusT,
        1,
        0,
        "(1-v+v^2)*(34-86*v-62*v^2+106*v^3+459*v^4-624*v^5-1887*v^6-6630*v^7-12804*v^8-24712*v^9\
         -40531*v^10-57622*v^11-62642*v^12-57622*v^13-40531*v^14-24712*v^15-12804*v^16\
         -6630*v^17-1887*v^18-624*v^19+459*v^20+106*v^21-62*v^22-86*v^23+34*v^24)\
         /(144*(1-v)^15*(1+v)^8*(1+v+v^2)^5*(1+v^2)^4)",
    ),
    slot("beta_2", Rho::OnePlusT, 2, 0, "(1+v^4)/(32*(1-v)^6*(1+v)^7*(1+v^2)^3)"),
    slot(
        "beta_1",
        Rho::OnePlusT,
        1,
        0,
        "(2-2*v-4*v^3+v^4-4*v^5-2*v^6-4*v^7+v^8-4*v^9-2*v^11+2*v^12)\
         /(16*(1-v)^7*(1+v)^8*(1+v+v^2)*(1+v^2)^4*(1-v+v^2))",
    ),
    slot("gamma_0", Rho::Cyclo3, 1, 0, GAMMA_0),
    slot("gamma_1", Rho::Cyclo3, 1, 1, GAMMA_1),
    slot("delta_0", Rho::Cyclo4, 1, 0, "1/(8*(1-v)^4*(1+v)^3*(1+v^2)^4)"),
    slot("delta_1", Rho::Cyclo4, 1, 1, "0"),
    slot(
        "epsilon_2",
        Rho::OneMinusVT,
        2,
        0,
        "-1*v^11/((1-v)^14*(1+v)^7*(1+v+v^2)^2*(1+v^2)^3*(1+v+v^2+v^3+v^4))",
    ),
    slot(
        "epsilon_1",
        Rho::OneMinusVT,
        1,
        0,
        "-1*v^11*(11+14*v+31*v^2+40*v^3+60*v^4+60*v^5+72*v^6+60*v^7+60*v^8+40*v^9+31*v^10+14*v^11+11*v^12)\
         /((1-v)^15*(1+v)^8*(1+v+v^2)^3*(1+v^2)^4*(1+v+v^2+v^3+v^4)^2*(1-v+v^2))",
    ),
    slot(
        "phi_0",
        Rho::OneMinusVT2,
        1,
        0,
        "v^5*(1+v+8*v^2+10*v^3+14*v^4+17*v^5+26*v^6+17*v^7+14*v^8+10*v^9+8*v^10+v^11+v^12)\
         /((1-v)^15*(1+v)^3*(1+v+v^2)^5*(1+v+v^2+v^3+v^4)^2)",
    ),
    slot(
        "phi_1",
        Rho::OneMinusVT2,
        1,
        1,
        "2*v^6*(1-v+v^2)*(1+2*v^2+2*v^3+2*v^4+v^6)/((1-v)^15*(1+v+v^2)^5*(1+v+v^2+v^3+v^4)^2)",
    ),
];

pub(crate) const MIXED_SLOTS: &[SlotText] = &[
    slot("alpha_4", Rho::OneMinusT, 4, 0, "(1-v+3*v^2-v^3+v^4)/(6*(1-v)^12*(1+v)^3*(1+v+v^2)^2)"),
    slot(
        "alpha_3",
        Rho::OneMinusT,
        3,
        0,
        "(3-8*v+4*v^2-9*v^3-8*v^4-5*v^5+12*v^6-8*v^7+7*v^8)/(12*(1-v)^13*(1+v)^4*(1+v+v^2)^3)",
    ),
    slot(
        "alpha_2",
        Rho::OneMinusT,
        2,
        0,
        "(17-55*v+124*v^2+304*v^3+540*v^4+777*v^5+1332*v^6+687*v^7+468*v^8+280*v^9+124*v^10-73*v^11+47*v^12)\
         /(72*(1-v)^14*(1+v)^5*(1+v+v^2)^4)",
    ),
    slot(
        "alpha_1",
        Rho::OneMinusT,
        1,
        0,
        "(25-134*v+165*v^2+123*v^3-1758*v^4-6240*v^5-9439*v^6-16537*v^7-20250*v^8\
         -16537*v^9-9439*v^10-6240*v^11-1758*v^12+123*v^13+165*v^14-134*v^15+25*v^16)\
         /(144*(1-v)^15*(1+v)^6*(1+v+v^2)^5)",
    ),
    slot(
        "beta",
        Rho::OnePlusT,
        1,
        0,
        "(1-v+v^2-v^3+v^4)/(16*(1-v)^5*(1+v)^6*(1+v+v^2)*(1+v^2)^2*(1-v+v^2))",
    ),
    slot("gamma_0", Rho::Cyclo3, 1, 0, GAMMA_0),
    slot("gamma_1", Rho::Cyclo3, 1, 1, GAMMA_1),
    slot(
        "epsilon_2",
        Rho::OneMinusVT,
        2,
        0,
        "-1*v^8/((1-v)^14*(1+v)^5*(1+v+v^2)^2*(1+v^2)*(1+v+v^2+v^3+v^4))",
    ),
    slot(
        "epsilon_1",
        Rho::OneMinusVT,
        1,
        0,
        "-1*v^8*(3+3*v+4*v^2+4*v^3+4*v^4+3*v^5+3*v^6)*(3+v+5*v^2+3*v^3+5*v^4+v^5+3*v^6)\
         /((1-v)^15*(1+v)^6*(1+v+v^2)^3*(1+v^2)^2*(1+v+v^2+v^3+v^4)^2*(1-v+v^2))",
    ),
    slot(
        "phi_0",
        Rho::OneMinusVT2,
        1,
        0,
        "2*v^4*(2+2*v+3*v^2+3*v^3+4*v^4+v^5+v^6)*(1+v+4*v^2+3*v^3+3*v^4+2*v^5+2*v^6)\
         /((1-v)^15*(1+v)*(1+v+v^2)^5*(1+v+v^2+v^3+v^4)^2)",
    ),
    slot(
        "phi_1",
        Rho::OneMinusVT2,
        1,
        1,
        "v^4*(1+5*v+12*v^2+18*v^3+34*v^4+37*v^5+42*v^6+37*v^7+34*v^8+18*v^9+12*v^10+5*v^11+v^12)\
         /((1-v)^15*(1+v+v^2)^5*(1+v+v^2+v^3+v^4)^2)",
    ),
];

pub(crate) fn hilbert_text(kind: AlgebraKind) -> &'static HilbertText {
    match kind {
        AlgebraKind::Pure => &PURE_HILBERT,
        AlgebraKind::Mixed => &MIXED_HILBERT,
    }
}

pub(crate) fn slot_texts(kind: AlgebraKind) -> &'static [SlotText] {
    match kind {
        AlgebraKind::Pure => PURE_SLOTS,
        AlgebraKind::Mixed => MIXED_SLOTS,
    }
}

pub(crate) fn q_text(kind: AlgebraKind) -> &'static str {
    match kind {
        AlgebraKind::Pure => PURE_Q,
        AlgebraKind::Mixed => MIXED_Q,
    }
}
