//! Case registry and transcribed polynomial fixtures: closed-form Ricci
//! components for the two Stiefel metric ansätze, the printed Einstein
//! systems, the published elimination polynomials with their alternate
//! expansions, and the Jensen reference solutions.
//!
//! Every fixture is cross-checked elsewhere: closed forms against the exact
//! so(N) matrix oracle, systems against equations derived from first
//! principles, and alternate printed expansions against each other.

use crate::coeff::{rat, Field, Rat};
use crate::error::{Error, Result};
use crate::homspace::{
    bracket_from_kahler_einstein, einstein_system, ricci_components, so_structure_constants,
    specialize_decomposition, stiefel_decomposition, strip_monomial_content,
    EinsteinSystem, IsotropyDecomposition, Summand,
};
use crate::monomial::MonomialOrder;
use crate::parampoly::{ParamPoly, RatFunc};
use crate::parse::parse_poly;
use crate::poly::{ctx, Ctx, MultiPoly};
use crate::ratio::Ratio;

/// Shared symbolic constants for parsing fixtures over ℚ(n): `n` itself and
/// the shift `m = n - 7` used by the alternate expansions.
fn nconsts() -> Vec<(&'static str, RatFunc)> {
    vec![
        ("n", RatFunc::n()),
        (
            "m",
            RatFunc::new(ParamPoly::new(vec![rat(-7), rat(1)]), ParamPoly::from_int(1)),
        ),
    ]
}

/// Parse an expression in `n` (and `m = n - 7`) into a polynomial in n.
fn npoly(src: &str) -> ParamPoly {
    let c = ctx(&["_t"], MonomialOrder::Lex);
    let v = parse_poly::<RatFunc>(src, &c, &nconsts())
        .expect("fixture parses")
        .constant_value()
        .expect("fixture is constant in _t");
    ratfunc_to_npoly(&v).expect("fixture is polynomial in n")
}

/// A rational function with constant denominator is a polynomial in n.
pub fn ratfunc_to_npoly(f: &RatFunc) -> Option<ParamPoly> {
    if f.den().is_constant() {
        let d = f.den().coeff(0);
        Some(f.num().scale(&d.recip()))
    } else {
        None
    }
}

fn parse_in<K: Field>(src: &str, c: &Ctx, consts: &[(&str, K)]) -> Result<MultiPoly<K>> {
    parse_poly(src, c, consts)
}

// ---------------------------------------------------------------------------
// Closed-form Ricci components for the Stiefel block ansätze
// ---------------------------------------------------------------------------

fn ricci_term<K: Field>(c: &Ctx, consts: &[(&str, K)], num: &str, den: &str) -> Result<Ratio<K>> {
    Ratio::new(parse_in(num, c, consts)?, parse_in(den, c, consts)?)
}

/// Closed-form Ricci components for the diagonal-block metric on
/// SO(n)/SO(k3) with blocks (k1, k2, k3). For k1 >= 2 the five components
/// come back in summand order (so(k1), so(k2), m12, m13, m23); for k1 = 1
/// the so(k1) summand is absent and four components come back in order
/// (so(k2), m12, m13, m23).
fn closed_ricci<K: Field>(c: &Ctx, consts: &[(&str, K)], five: bool) -> Result<Vec<Ratio<K>>> {
    let t = |num: &str, den: &str| ricci_term(c, consts, num, den);
    let mut out = Vec::new();
    if five {
        let r1 = t("k1-2", "4*(n-2)*x1")?
            .add(&t("k2*x1", "4*(n-2)*x12^2")?)?
            .add(&t("k3*x1", "4*(n-2)*x13^2")?)?;
        out.push(r1);
    }
    let r2 = t("k2-2", "4*(n-2)*x2")?
        .add(&t(if five { "k1*x2" } else { "x2" }, "4*(n-2)*x12^2")?)?
        .add(&t("k3*x2", "4*(n-2)*x23^2")?)?;
    out.push(r2);
    let mut r12 = t("1", "2*x12")?
        .add(&t("k3*x12", "4*(n-2)*x13*x23")?)?
        .sub(&t("k3*x13", "4*(n-2)*x12*x23")?)?
        .sub(&t("k3*x23", "4*(n-2)*x12*x13")?)?
        .sub(&t("(k2-1)*x2", "4*(n-2)*x12^2")?)?;
    if five {
        r12 = r12.sub(&t("(k1-1)*x1", "4*(n-2)*x12^2")?)?;
    }
    out.push(r12);
    let mut r13 = t("1", "2*x13")?
        .add(&t("k2*x13", "4*(n-2)*x12*x23")?)?
        .sub(&t("k2*x12", "4*(n-2)*x13*x23")?)?
        .sub(&t("k2*x23", "4*(n-2)*x12*x13")?)?;
    if five {
        r13 = r13.sub(&t("(k1-1)*x1", "4*(n-2)*x13^2")?)?;
    }
    out.push(r13);
    let k1s = if five { "k1" } else { "1" };
    let r23 = t("1", "2*x23")?
        .add(&t(&format!("{k1s}*x23"), "4*(n-2)*x13*x12")?)?
        .sub(&t(&format!("{k1s}*x13"), "4*(n-2)*x12*x23")?)?
        .sub(&t(&format!("{k1s}*x12"), "4*(n-2)*x23*x13")?)?
        .sub(&t("(k2-1)*x2", "4*(n-2)*x23^2")?)?;
    out.push(r23);
    Ok(out)
}

fn stiefel_vars(k1: i64) -> Vec<&'static str> {
    if k1 >= 2 {
        vec!["x1", "x2", "x12", "x13", "x23"]
    } else {
        vec!["x2", "x12", "x13", "x23"]
    }
}

/// Closed-form Ricci components at concrete block sizes, over ℚ.
pub fn closed_ricci_at(k1: i64, k2: i64, k3: i64) -> Result<Vec<Ratio<Rat>>> {
    if k1 < 1 || k2 < 2 || k3 < 1 {
        return Err(Error::BadCase(format!(
            "closed Ricci forms need k1 >= 1, k2 >= 2, k3 >= 1, got ({k1},{k2},{k3})"
        )));
    }
    let c = ctx(&stiefel_vars(k1), MonomialOrder::Lex);
    let consts: Vec<(&str, Rat)> = vec![
        ("k1", rat(k1)),
        ("k2", rat(k2)),
        ("k3", rat(k3)),
        ("n", rat(k1 + k2 + k3)),
    ];
    closed_ricci(&c, &consts, k1 >= 2)
}

/// Closed-form Ricci components with fixed (k1, k2) and symbolic
/// k3 = n - k1 - k2, over ℚ(n).
pub fn closed_ricci_parametric(k1: i64, k2: i64) -> Result<Vec<Ratio<RatFunc>>> {
    if k1 < 1 || k2 < 2 {
        return Err(Error::BadCase(format!(
            "closed Ricci forms need k1 >= 1, k2 >= 2, got ({k1},{k2})"
        )));
    }
    let c = ctx(&stiefel_vars(k1), MonomialOrder::Lex);
    let k3 = RatFunc::new(
        ParamPoly::new(vec![rat(-(k1 + k2)), rat(1)]),
        ParamPoly::from_int(1),
    );
    let consts: Vec<(&str, RatFunc)> = vec![
        ("k1", RatFunc::from_rat(rat(k1))),
        ("k2", RatFunc::from_rat(rat(k2))),
        ("k3", k3),
        ("n", RatFunc::n()),
    ];
    closed_ricci(&c, &consts, k1 >= 2)
}

/// The four Ricci components of the (1, 4, n-5) ansatz exactly as printed in
/// the specialized display, in summand order (so(k2), m12, m13, m23). The
/// display disagrees with the general closed form in two places; see
/// [`verify_transcription`].
pub fn printed_metric7_ricci() -> Result<Vec<Ratio<RatFunc>>> {
    let c = ctx(&["x2", "x12", "x13", "x23"], MonomialOrder::Lex);
    let consts = nconsts();
    let t = |num: &str, den: &str| ricci_term(&c, &consts, num, den);
    let r2 = t("1", "4*(n-2)*x2")?
        .add(&t("x2", "4*(n-2)*x12^2")?)?
        .add(&t("(n-5)*x2", "4*(n-2)*x23^2")?)?;
    let r12 = t("1", "2*x12")?
        .add(&t("(n-4)*x12", "4*(n-2)*x13*x23")?)?
        .sub(&t("(n-4)*x13", "4*(n-2)*x12*x23")?)?
        .sub(&t("(n-4)*x23", "4*(n-2)*x12*x13")?)?
        .sub(&t("3*x2", "4*(n-2)*x12^2")?)?;
    let r13 = t("1", "2*x13")?
        .add(&t("x13", "(n-2)*x12*x23")?)?
        .sub(&t("x12", "(n-2)*x13*x23")?)?
        .sub(&t("x23", "(n-2)*x12*x13")?)?;
    let r23 = t("1", "2*x23")?
        .add(&t("x23", "4*(n-2)*x13*x12")?)?
        .sub(&t("x13", "4*(n-2)*x12*x23")?)?
        .sub(&t("x12", "4*(n-2)*x23*x13")?)?
        .sub(&t("3*x2", "4*(n-2)*x23^2")?)?;
    Ok(vec![r2, r12, r13, r23])
}

// ---------------------------------------------------------------------------
// Printed Einstein systems
// ---------------------------------------------------------------------------

const F_SRC: [&str; 3] = [
    "-n*x2*x12^3 + 5*x2*x12^3 + n*x13*x2^2*x12^2 - 5*x13*x2^2*x12^2 + 2*x13*x12^2 \
     + n*x13^2*x2*x12 - 5*x13^2*x2*x12 + n*x2*x12 - 2*n*x13*x2*x12 + 4*x13*x2*x12 \
     - 5*x2*x12 + 4*x13*x2^2",
    "n*x12^3 - 4*x12^3 - 2*n*x13*x12^2 + 4*x13*x12^2 + 3*x13*x2*x12^2 - n*x13^2*x12 \
     + 6*x13^2*x12 - n*x12 + 2*n*x13*x12 - 4*x13*x12 + 4*x12 - 3*x13*x2",
    "3*x12^2 - 2*n*x12 + 2*n*x13*x12 - 4*x13*x12 - 3*x13*x2*x12 + 4*x12 - 5*x13^2 + 5",
];

const G_SRC: [&str; 4] = [
    "n*x1*x12^2*x2 - n*x12^2*x13^2*x2^2 - 5*x1*x12^2*x2 + 3*x1*x13^2*x2 \
     + 5*x12^2*x13^2*x2^2 + x12^2 - x13^2 - 2*x13^2*x2^2",
    "n*x1*x12^2 - n*x12^3*x13 + n*x12*x13^3 - 2*n*x12*x13^2 + n*x12*x13 - 5*x1*x12^2 \
     + 4*x1*x13^2 + 5*x12^3*x13 - 5*x12*x13^3 + 4*x12*x13^2 - 5*x12*x13 + 2*x13^2*x2",
    "n*x1*x12^2 - 2*n*x12^2*x13 - 4*x1*x12^2 + 3*x1*x13^2 + 3*x12^3*x13 + 4*x12^2*x13 \
     - 3*x12*x13^3 + 3*x12*x13",
    "2*n*x12*x13^2 - 2*n*x12*x13 + x1*x12 + x12^2*x13 - 2*x12*x13^2*x2 - 4*x12*x13^2 \
     + 4*x12*x13 - 5*x13^3 + 5*x13",
];

const SP_SRC: [&str; 3] = [
    "(x1-x3)*(x1*x2 + p*x1*x2 + x2*x3 + p*x2*x3 + x1*x4 + n*x1*x4 - p*x1*x4 \
     - 2*x2*x4 - 2*n*x2*x4 + x3*x4 + n*x3*x4 - p*x3*x4)",
    "4*(n+1)*x3*x4*(x2-x1) + (n+p+1)*x4*(x1^2-x2^2) - (n-3*p+1)*x3^2*x4 \
     + (p+1)*x2*(x1^2-x3^2-x4^2)",
    "4*(n+1)*x1*x2*(x4-x3) + (2*n-p+1)*x2*(x3^2-x4^2) + (2*n-3*p-1)*x1^2*x2 \
     + (n-p+1)*x4*(x3^2-x1^2-x2^2)",
];

/// The three printed equations of the (1, 4, n-5) ansatz with x23 = 1, over
/// ℚ(n). `c` must contain x2, x12, x13.
pub fn printed_metric7_system(c: &Ctx) -> Result<Vec<MultiPoly<RatFunc>>> {
    F_SRC.iter().map(|s| parse_in(s, c, &nconsts())).collect()
}

/// The four printed equations of the (2, 3, n-5) ansatz with x23 = 1, over
/// ℚ(n). `c` must contain x1, x2, x12, x13.
pub fn printed_metric6_system(c: &Ctx) -> Result<Vec<MultiPoly<RatFunc>>> {
    G_SRC.iter().map(|s| parse_in(s, c, &nconsts())).collect()
}

/// The printed parametric system for Sp(n)/(U(p) x U(n-p)) at concrete
/// integer (n, p), in variables x1..x4.
pub fn printed_sp_system(c: &Ctx, n: &Rat, p: &Rat) -> Result<Vec<MultiPoly<Rat>>> {
    let consts: Vec<(&str, Rat)> = vec![("n", n.clone()), ("p", p.clone())];
    SP_SRC.iter().map(|s| parse_in(s, c, &consts)).collect()
}

// ---------------------------------------------------------------------------
// Published elimination polynomials
// ---------------------------------------------------------------------------

const H1_SRC: &str = concat!(
    "((-1+n)^3*(-7+3*n)^2*(-81+78*n-22*n^2+2*n^3)*(-1+22*n-14*n^2+2*n^3))*x13^10",
    " - 2*(-1+n)^2*(-7+3*n)*(73599-286463*n+441002*n^2-361584*n^3+175526*n^4",
    "-52216*n^5+9376*n^6-936*n^7+40*n^8)*x13^9",
    " + (-1+n)*(11395069-47604434*n+87540578*n^2-93088081*n^3+63294239*n^4",
    "-28742935*n^5+8835132*n^6-1817860*n^7+239764*n^8-18192*n^9+572*n^10+4*n^11)*x13^8",
    " - 2*(-22336092+102242734*n-207451554*n^2+246088757*n^3-189448366*n^4",
    "+99318803*n^5-36163892*n^6+9130532*n^7-1555886*n^8+166276*n^9-9008*n^10",
    "+16*n^11+16*n^12)*x13^7",
    " + (-28792736+134723232*n-268245792*n^2+301569274*n^3-211579655*n^4",
    "+95750323*n^5-27336050*n^6+4215160*n^7+516*n^8-146852*n^9+30868*n^10",
    "-2928*n^11+112*n^12)*x13^6",
    " - 2*(65620080-227005040*n+365106888*n^2-368314424*n^3+261802867*n^4",
    "-137589389*n^5+54260010*n^6-16033372*n^7+3504636*n^8-550600*n^9+58748*n^10",
    "-3800*n^11+112*n^12)*x13^5",
    " + (59501248-288258784*n+627812916*n^2-804675780*n^3+674941445*n^4",
    "-391428642*n^5+161902013*n^6-48456452*n^7+10471948*n^8-1597772*n^9",
    "+163380*n^10-10040*n^11+280*n^12)*x13^4",
    " - 4*(-24508224+70221360*n-72172288*n^2+18690688*n^3+27533464*n^4",
    "-33792759*n^5+19444979*n^6-7070399*n^7+1733171*n^8-287260*n^9+30980*n^10",
    "-1968*n^11+56*n^12)*x13^3",
    " + 4*(-1+n)*(4378624-15912576*n+22754384*n^2-15980992*n^3+4953656*n^4",
    "+505552*n^5-1046519*n^6+426038*n^7-93847*n^8+12221*n^9-889*n^10+28*n^11)*x13^2",
    " - 8*(-6+n)*(-4+n)*(-1+n)^2*(2+n)*(31664-44256*n+19472*n^2-1636*n^3-1423*n^4",
    "+535*n^5-76*n^6+4*n^7)*x13",
    " + 4*(-6+n)^2*(-4+n)^2*(-1+n)^3*(2+n)^2*(124-24*n-5*n^2+n^3)"
);

const H2_SRC: &str = concat!(
    "((-1+n)^3*(-81+78*n-22*n^2+2*n^3)*(-1+22*n-14*n^2+2*n^3))*x12^10",
    " - 2*(-2+n)*(-1+n)^2*(-5001+9686*n-6508*n^2+1740*n^3-96*n^4-32*n^5+4*n^6)*x12^9",
    " + (-1+n)*(52393-76703*n-6162*n^2+73700*n^3-56664*n^4+19352*n^5-3176*n^6+204*n^7)*x12^8",
    " - 4*(-2+n)*(46818-149187*n+191207*n^2-123037*n^3+41605*n^4-6890*n^5+394*n^6+10*n^7)*x12^7",
    " + (2108590-5378218*n+5585179*n^2-2957751*n^3+809684*n^4-92936*n^5-1860*n^6+912*n^7)*x12^6",
    " - 2*(-2+n)*(829930-1018838*n+348263*n^2+24142*n^3-31870*n^4+4152*n^5+16*n^6)*x12^5",
    " + (-150922+2293544*n-3272491*n^2+1786572*n^3-423924*n^4+33984*n^5+712*n^6)*x12^4",
    " - 20*(-2+n)*(-104374+109331*n-35890*n^2+2645*n^3+312*n^4)*x12^3",
    " + 25*(-76485+58035*n-4052*n^2-5488*n^3+1072*n^4)*x12^2",
    " - 250*(-2+n)*(2051-1298*n+224*n^2)*x12",
    " + 5625*(107-56*n+8*n^2)"
);

const H2_SHIFT_SRC: &str = concat!(
    "(2412504+5213484*m+4966002*m^2+2728881*m^3+950664*m^4+217336*m^5+32580*m^6",
    "+3088*m^7+168*m^8+4*m^9)*x12^10",
    " - (15481800+30522960*m+26336250*m^2+13013966*m^3+4047916*m^4+819792*m^5",
    "+107792*m^6+8840*m^7+408*m^8+8*m^9)*x12^9",
    " + (48245892+85904548*m+66240641*m^2+28829438*m^3+7737264*m^4+1310572*m^5",
    "+136796*m^6+8044*m^7+204*m^8)*x12^8",
    " - (97049440+154931088*m+105623840*m^2+39883780*m^3+9037872*m^4+1239340*m^5",
    "+97472*m^6+3736*m^7+40*m^8)*x12^7",
    " + (137946250+196719755*m+117648788*m^2+38055081*m^3+7138384*m^4+767392*m^5",
    "+42828*m^6+912*m^7)*x12^6",
    " - (141888350+179760770*m+93307270*m^2+25366350*m^3+3804144*m^4+298660*m^5",
    "+9808*m^6+32*m^7)*x12^5",
    " + (105439675+117258450*m+51819665*m^2+11453180*m^3+1288836*m^4+63888*m^5",
    "+712*m^6)*x12^4",
    " - (55868000+53548600*m+19613300*m^2+3365760*m^3+258820*m^4+6240*m^5)*x12^3",
    " + (20567500+16633875*m+4896700*m^2+613200*m^3+26800*m^4)*x12^2",
    " - (4926250+3282750*m+739500*m^2+56000*m^3)*x12",
    " + 601875+315000*m+45000*m^2"
);

const H3_SRC: &str = concat!(
    "81*(-1+n)^3*(-7+3*n)^2*(124-24*n-5*n^2+n^3)*x2^10",
    " - 54*(-2+n)*(-1+n)^2*(-7+3*n)*(-12620+10066*n-1796*n^2-63*n^3+20*n^4+n^5)*x2^9",
    " + 9*(-1+n)*(5444348-12985508*n+12566667*n^2-6115028*n^3+1510310*n^4-165004*n^5",
    "+6142*n^6-961*n^7+153*n^8+n^9)*x2^8",
    " - 6*(-2+n)*(-2979568+8238150*n-7797806*n^2+4055755*n^3-1567204*n^4+409230*n^5",
    "-37660*n^6-4903*n^7+798*n^8+8*n^9)*x2^7",
    " + (664693040-1960669464*n+2468056527*n^2-1726283201*n^3+735938803*n^4",
    "-196313137*n^5+31516618*n^6-2509926*n^7+9408*n^8+8308*n^9+64*n^10)*x2^6",
    " - 4*(-2+n)*(-59469494+203982575*n-258060568*n^2+163886493*n^3-58390388*n^4",
    "+11911514*n^5-1270014*n^6+44728*n^7+1634*n^8)*x2^5",
    " + (-1148666992+2483878280*n-2018846305*n^2+682058094*n^3+1140539*n^4",
    "-74249792*n^5+24038016*n^6-3335112*n^7+180072*n^8)*x2^4",
    " - 20*(-2+n)*(7338836-31781095*n+35343394*n^2-17774551*n^3+4654668*n^4",
    "-624056*n^5+34040*n^6)*x2^3",
    " + 100*(8425328-17876816*n+15076868*n^2-6558218*n^3+1569983*n^4-197660*n^5",
    "+10272*n^6)*x2^2",
    " - 1000*(-4+n)*(-2+n)*(-41149+30677*n-7916*n^2+700*n^3)*x2",
    " + 22500*(-4+n)^2*(107-56*n+8*n^2)"
);

const H3_SHIFT_SRC: &str = concat!(
    "(185177664+353699136*m+287249328*m^2+128537280*m^3+34614540*m^4+5746788*m^5",
    "+574533*m^6+31590*m^7+729*m^8)*x2^10",
    " - (1776660480+3383889696*m+2750137920*m^2+1239055920*m^3+338884128*m^4",
    "+57943890*m^5+6131268*m^6+381348*m^7+12420*m^8+162*m^9)*x2^9",
    " + (7529406192+14385411216*m+11794825368*m^2+5412553560*m^3+1528684479*m^4",
    "+275559957*m^5+31789143*m^6+2286063*m^7+96003*m^8+1998*m^9+9*m^10)*x2^8",
    " - (19003144320+36647336304*m+30550728648*m^2+14409983892*m^3+4241037702*m^4",
    "+809574732*m^5+100606440*m^6+7901580*m^7+362442*m^8+8052*m^9+48*m^10)*x2^7",
    " + (31751845080+61819273140*m+52334228666*m^2+25252421727*m^3+7654138784*m^4",
    "+1509829133*m^5+193077556*m^6+15306474*m^7+673932*m^8+12788*m^9+64*m^10)*x2^6",
    " - (35544821200+69080883040*m+58454603500*m^2+28210577088*m^3+8532473268*m^4",
    "+1666191528*m^5+207197760*m^6+15378664*m^7+577608*m^8-6536*m^9)*x2^5",
    " + (25602766500+48488384800*m+39762417135*m^2+18448573770*m^3+5297021059*m^4",
    "+962339608*m^5+107676312*m^6+6748920*m^7+180072*m^8)*x2^4",
    " - (11214712000+19967074400*m+15143699900*m^2+6348086000*m^3+1588873060*m^4",
    "+237204560*m^5+19516480*m^6+680800*m^7)*x2^3",
    " + (2853346500+4609869000*m+3090157200*m^2+1101382600*m^3+220180300*m^4",
    "+23376400*m^5+1027200*m^6)*x2^2",
    " - (387090000+547743000*m+309590000*m^2+87525000*m^3+12384000*m^4+700000*m^5)*x2",
    " + 21667500+25785000*m+11587500*m^2+2340000*m^3+180000*m^4"
);

/// h1 as printed: degree 10 in x13, coefficients polynomial in n. `c` must
/// contain x13.
pub fn paper_h1(c: &Ctx) -> Result<MultiPoly<RatFunc>> {
    parse_in(H1_SRC, c, &nconsts())
}

/// h2 as printed (degree 10 in x12), and the alternate expansion in powers
/// of n - 7.
pub fn paper_h2(c: &Ctx) -> Result<MultiPoly<RatFunc>> {
    parse_in(H2_SRC, c, &nconsts())
}

pub fn paper_h2_shifted(c: &Ctx) -> Result<MultiPoly<RatFunc>> {
    parse_in(H2_SHIFT_SRC, c, &nconsts())
}

/// h3 as printed (degree 10 in x2), and the alternate expansion in powers
/// of n - 7.
pub fn paper_h3(c: &Ctx) -> Result<MultiPoly<RatFunc>> {
    parse_in(H3_SRC, c, &nconsts())
}

pub fn paper_h3_shifted(c: &Ctx) -> Result<MultiPoly<RatFunc>> {
    parse_in(H3_SHIFT_SRC, c, &nconsts())
}

/// The printed closed forms of h1 at x13 = 0, 1, 2, as polynomials in n.
pub fn paper_h1_values() -> [ParamPoly; 3] {
    [
        npoly(
            "-1142784+3459072*n-3064576*n^2-222464*n^3+1556672*n^4-558592*n^5 \
             -114256*n^6+106352*n^7-19036*n^8-1072*n^9+776*n^10-96*n^11+4*n^12",
        ),
        npoly("988524-7380396*n+9224766*n^2-3877551*n^3+671409*n^4-40824*n^5"),
        npoly(
            "-1077260544+2404260096*n-1787496640*n^2+192056128*n^3+482885648*n^4 \
             -324418304*n^5+97443600*n^6-15521168*n^7+1168004*n^8+8544*n^9 \
             -8968*n^10+528*n^11+4*n^12",
        ),
    ]
}

/// Degree-51 scaling polynomial a(n) from the linear back-substitution
/// relations, printed in powers of n - 7 (all coefficients positive, so
/// a(n) > 0 for every n >= 7). Coefficients listed from degree 51 down.
pub fn paper_a() -> ParamPoly {
    const C: [i64; 52] = [
        1603489, 331629, 3330235, 21654178, 10256996, 37749148, 1124243, 278618, 586377,
        10642404, 16857968, 23530271, 29165722, 32307839, 32153102, 28875189, 23485774,
        17353528, 11678023, 71720699, 40265082, 20690586, 97403757, 42033064, 16631548,
        60336057, 20061477, 61092907, 17022304, 43336722, 10063783, 21273147, 40831997,
        70963420, 11131153, 15703148, 19849915, 22400611, 22495760, 20062962, 15890989,
        11209194, 70758073, 40094148, 20263187, 89201697, 32751057, 94463613, 19935475,
        28717417, 27565510, 16817600,
    ];
    let shift = ParamPoly::new(vec![rat(-7), rat(1)]);
    let mut acc = ParamPoly::zero();
    for c in C {
        acc = acc.mul(&shift).add(&ParamPoly::from_int(c));
    }
    acc
}

/// The printed value p1(1) for the degree-22 eliminant of the (2, 3, n-5)
/// ansatz, in factored form and in the alternate n - 7 expansion.
pub fn paper_p1_at_1() -> ParamPoly {
    npoly(
        "-51984*(5*n^3-44*n^2+130*n-75)^2 \
         *(56*n^5-921*n^4+5319*n^3-12654*n^2+10124*n-1356)",
    )
}

pub fn paper_p1_at_1_shifted() -> ParamPoly {
    npoly(
        "-51984*(5*m^3+61*m^2+249*m+394)^2 \
         *(56*m^5+1039*m^4+6971*m^3+20351*m^2+23529*m+3754)",
    )
}

/// Published univariate polynomial specialized at integer n: "h1" (in x13),
/// "h2" (in x12), "h3" (in x2), or the scalar values "a" and "p1_at_1"
/// (returned as constants over the single variable "n").
pub fn paper_polynomial(id: &str, n0: &Rat) -> Result<MultiPoly<Rat>> {
    match id {
        "h1" => paper_h1(&ctx(&["x13"], MonomialOrder::Lex))?.specialize(n0),
        "h2" => paper_h2(&ctx(&["x12"], MonomialOrder::Lex))?.specialize(n0),
        "h3" => paper_h3(&ctx(&["x2"], MonomialOrder::Lex))?.specialize(n0),
        "a" => Ok(MultiPoly::constant(
            ctx(&["n"], MonomialOrder::Lex),
            paper_a().eval(n0),
        )),
        "p1_at_1" => Ok(MultiPoly::constant(
            ctx(&["n"], MonomialOrder::Lex),
            paper_p1_at_1().eval(n0),
        )),
        other => Err(Error::BadCase(format!("unknown polynomial id `{other}`"))),
    }
}

// ---------------------------------------------------------------------------
// Jensen reference solutions
// ---------------------------------------------------------------------------

/// The Jensen quadratic (n-1) x2^2 - 2 (n-2) x2 + 3 whose two positive roots
/// give the Jensen metrics x12 = x2, x13 = x23 = 1. `c` must contain x2.
pub fn jensen_quadratic(c: &Ctx) -> Result<MultiPoly<RatFunc>> {
    parse_in("(n-1)*x2^2 - 2*(n-2)*x2 + 3", c, &nconsts())
}

/// Generators of the Jensen locus ideal <x12 - x2, x13 - 1, quadratic> in a
/// context containing x2, x12, x13.
pub fn jensen_ideal(c: &Ctx) -> Result<Vec<MultiPoly<RatFunc>>> {
    Ok(vec![
        parse_in("x12 - x2", c, &nconsts())?,
        parse_in("x13 - 1", c, &nconsts())?,
        jensen_quadratic(c)?,
    ])
}

// ---------------------------------------------------------------------------
// Case registry
// ---------------------------------------------------------------------------

/// A concrete, fully specialized case: the decomposition (when one exists),
/// the Einstein system over ℚ, and the unknown scale names remaining after
/// normalization.
pub struct CaseRecord {
    pub id: String,
    pub params: Vec<(String, Rat)>,
    pub decomposition: Option<IsotropyDecomposition<Rat>>,
    pub system: EinsteinSystem<Rat>,
    pub unknowns: Vec<String>,
}

pub fn list_cases() -> Vec<(&'static str, &'static str)> {
    vec![
        (
            "stiefel-metric7",
            "SO(n)/SO(n-5) with blocks (1,4,n-5); params: n (integer >= 7)",
        ),
        (
            "stiefel-metric6",
            "SO(n)/SO(n-5) with blocks (2,3,n-5); params: n (integer >= 7)",
        ),
        (
            "flag-q2",
            "flag manifold with two isotropy summands; params: d1, d2 (positive integers)",
        ),
        (
            "flag-q3-A1(3)",
            "flag manifold, three summands, one T-root chain; params: d1, d2, d3, t1, t2",
        ),
        (
            "flag-Sp-B2b",
            "Sp(n)/(U(p) x U(n-p)) printed system; params: n, p (integers, 1 <= p < n)",
        ),
        (
            "wallach-SO",
            "SO(k1+k2+k3)/(SO(k1) x SO(k2) x SO(k3)); params: k1, k2, k3 (>= 1, sum >= 3)",
        ),
    ]
}

fn param<'a>(params: &'a [(&str, Rat)], name: &str) -> Result<&'a Rat> {
    params
        .iter()
        .find(|(k, _)| *k == name)
        .map(|(_, v)| v)
        .ok_or_else(|| Error::BadCase(format!("missing parameter `{name}`")))
}

fn int_param(params: &[(&str, Rat)], name: &str) -> Result<i64> {
    let v = param(params, name)?;
    if !v.is_integer() {
        return Err(Error::BadCase(format!("parameter `{name}` must be an integer")));
    }
    i64::try_from(v.to_integer())
        .map_err(|_| Error::BadCase(format!("parameter `{name}` out of range")))
}

fn stiefel_case(id: &str, k1: u32, k2: u32, params: &[(&str, Rat)]) -> Result<CaseRecord> {
    let n = int_param(params, "n")?;
    if n < 7 {
        return Err(Error::BadCase(format!("case `{id}` needs n >= 7, got {n}")));
    }
    let d = specialize_decomposition(&stiefel_decomposition(k1, k2)?, &rat(n))?;
    // chain r1 = r2 = r12 = r23 = r13 (or r2 = r12 = r23 = r13 when the
    // so(k1) summand is absent), normalized by x23 = 1
    // the source pairings: a chain r2 = r12 = r23 = r13 for the
    // four-summand ansatz, and r1 = r2, r1 = r12, r1 = r13, r13 = r23 for
    // the five-summand one
    let pairing: Vec<(usize, usize)> = if d.q() == 4 {
        vec![(0, 1), (1, 3), (3, 2)]
    } else {
        vec![(0, 1), (0, 2), (0, 3), (3, 4)]
    };
    let system = einstein_system(&d, &pairing, &[("x23", rat(1))], id)?;
    let unknowns = d
        .summands
        .iter()
        .map(|s| s.var.clone())
        .filter(|v| v != "x23")
        .collect();
    Ok(CaseRecord {
        id: id.into(),
        params: vec![("n".into(), rat(n))],
        decomposition: Some(d),
        system,
        unknowns,
    })
}

/// Build a fully specialized case from the registry.
pub fn get_case(id: &str, params: &[(&str, Rat)]) -> Result<CaseRecord> {
    match id {
        "stiefel-metric7" => stiefel_case(id, 1, 4, params),
        "stiefel-metric6" => stiefel_case(id, 2, 3, params),
        "flag-q2" => {
            let d1 = int_param(params, "d1")?;
            let d2 = int_param(params, "d2")?;
            if d1 < 1 || d2 < 1 {
                return Err(Error::BadCase("flag-q2 needs d1, d2 >= 1".into()));
            }
            let mut d = IsotropyDecomposition::new(vec![
                Summand {
                    label: "m1".into(),
                    var: "x1".into(),
                    dim: rat(d1),
                },
                Summand {
                    label: "m2".into(),
                    var: "x2".into(),
                    dim: rat(d2),
                },
            ]);
            let b = bracket_from_kahler_einstein(&rat(d1), &rat(d2))?;
            d.set_triple(1, 0, 0, b);
            let system = einstein_system(&d, &[(0, 1)], &[("x1", rat(1))], id)?;
            Ok(CaseRecord {
                id: id.into(),
                params: vec![("d1".into(), rat(d1)), ("d2".into(), rat(d2))],
                decomposition: Some(d),
                system,
                unknowns: vec!["x2".into()],
            })
        }
        "flag-q3-A1(3)" => {
            let mut ps = Vec::new();
            for name in ["d1", "d2", "d3", "t1", "t2"] {
                let v = param(params, name)?.clone();
                if v <= rat(0) {
                    return Err(Error::BadCase(format!(
                        "flag-q3-A1(3) needs positive `{name}`"
                    )));
                }
                ps.push((name.to_string(), v));
            }
            let mut d = IsotropyDecomposition::new(
                (0..3)
                    .map(|k| Summand {
                        label: format!("m{}", k + 1),
                        var: format!("x{}", k + 1),
                        dim: ps[k].1.clone(),
                    })
                    .collect(),
            );
            // [2|11] = t1, [3|12] = t2
            d.set_triple(1, 0, 0, ps[3].1.clone());
            d.set_triple(2, 0, 1, ps[4].1.clone());
            let system = einstein_system(&d, &[(0, 1), (1, 2)], &[("x1", rat(1))], id)?;
            Ok(CaseRecord {
                id: id.into(),
                params: ps,
                decomposition: Some(d),
                system,
                unknowns: vec!["x2".into(), "x3".into()],
            })
        }
        "flag-Sp-B2b" => {
            let n = int_param(params, "n")?;
            let p = int_param(params, "p")?;
            if n < 2 || p < 1 || p >= n {
                return Err(Error::BadCase(
                    "flag-Sp-B2b needs integers n >= 2 and 1 <= p < n".into(),
                ));
            }
            let c = ctx(&["x1", "x2", "x3", "x4"], MonomialOrder::Lex);
            let equations = printed_sp_system(&c, &rat(n), &rat(p))?
                .iter()
                .map(|e| strip_monomial_content(e).primitive())
                .collect();
            Ok(CaseRecord {
                id: id.into(),
                params: vec![("n".into(), rat(n)), ("p".into(), rat(p))],
                decomposition: None,
                system: EinsteinSystem {
                    equations,
                    normalization: vec![],
                    provenance: "flag-Sp-B2b transcribed system".into(),
                },
                unknowns: vec!["x1".into(), "x2".into(), "x3".into(), "x4".into()],
            })
        }
        "wallach-SO" => {
            let k1 = int_param(params, "k1")?;
            let k2 = int_param(params, "k2")?;
            let k3 = int_param(params, "k3")?;
            if k1 < 1 || k2 < 1 || k3 < 1 || k1 + k2 + k3 < 3 {
                return Err(Error::BadCase(
                    "wallach-SO needs k1, k2, k3 >= 1 with k1+k2+k3 >= 3".into(),
                ));
            }
            let d = so_structure_constants(
                &[k1 as usize, k2 as usize, k3 as usize],
                &[0, 1, 2],
            )?;
            let last = d.summands.last().unwrap().var.clone();
            let pairing: Vec<(usize, usize)> = (0..d.q() - 1).map(|k| (k, k + 1)).collect();
            let system = einstein_system(&d, &pairing, &[(last.as_str(), rat(1))], id)?;
            let unknowns = d
                .summands
                .iter()
                .map(|s| s.var.clone())
                .filter(|v| *v != last)
                .collect();
            Ok(CaseRecord {
                id: id.into(),
                params: vec![
                    ("k1".into(), rat(k1)),
                    ("k2".into(), rat(k2)),
                    ("k3".into(), rat(k3)),
                ],
                decomposition: Some(d),
                system,
                unknowns,
            })
        }
        other => Err(Error::BadCase(format!("unknown case `{other}`"))),
    }
}

// ---------------------------------------------------------------------------
// Transcription verification
// ---------------------------------------------------------------------------

/// If `a == s * b` for a nonzero scalar s, return s.
pub fn scalar_ratio<K: Field>(a: &MultiPoly<K>, b: &MultiPoly<K>) -> Option<K> {
    match (a.leading(), b.leading()) {
        (None, None) => Some(K::one()),
        (Some((ma, ca)), Some((mb, cb))) if ma == mb => {
            let s = ca.div(cb);
            if *a == b.scale(&s) {
                Some(s)
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Cross-check report for one case: what the derivation reproduces and where
/// the printed source deviates from it.
pub struct TranscriptionReport {
    pub case_id: String,
    pub matches: Vec<String>,
    pub discrepancies: Vec<String>,
}

fn equations_from_ratios<K: Field>(
    rs: &[Ratio<K>],
    pairing: &[(usize, usize)],
    normalization: &[(&str, K)],
) -> Result<Vec<MultiPoly<K>>> {
    let mut out = Vec::new();
    for &(i, j) in pairing {
        let diff = rs[i].sub(&rs[j])?;
        let mut eq = strip_monomial_content(&diff.num);
        let c = eq.ctx.clone();
        let bindings: Vec<(&str, MultiPoly<K>)> = normalization
            .iter()
            .map(|(name, v)| (*name, MultiPoly::constant(c.clone(), v.clone())))
            .collect();
        eq = eq.substitute_named(&bindings)?.primitive();
        out.push(eq);
    }
    Ok(out)
}

fn match_up_to_scalar<K: Field>(
    derived: &[MultiPoly<K>],
    printed: &[MultiPoly<K>],
    names: &[&str],
    report: &mut TranscriptionReport,
) {
    for (k, eq) in derived.iter().enumerate() {
        let hit = printed
            .iter()
            .enumerate()
            .find_map(|(j, p)| scalar_ratio(eq, p).map(|s| (j, s)));
        match hit {
            Some((j, s)) => report.matches.push(format!(
                "derived equation {} equals {} up to the scalar {s}",
                k + 1,
                names[j]
            )),
            None => report.discrepancies.push(format!(
                "derived equation {} matches no printed equation up to a scalar",
                k + 1
            )),
        }
    }
}

/// Compare each derivation against its printed counterpart and report exact
/// matches (up to documented scalings) and discrepancies.
pub fn verify_transcription(case_id: &str) -> Result<TranscriptionReport> {
    let mut report = TranscriptionReport {
        case_id: case_id.into(),
        matches: vec![],
        discrepancies: vec![],
    };
    match case_id {
        "stiefel-metric7" => {
            // general closed forms against the first-principles derivation
            let d = stiefel_decomposition(1, 4)?;
            let derived = ricci_components(&d)?;
            let closed = closed_ricci_parametric(1, 4)?;
            for (k, (a, b)) in derived.iter().zip(&closed).enumerate() {
                if a.equal(b)? {
                    report.matches.push(format!(
                        "closed-form Ricci component {} matches the derivation over Q(n)",
                        k + 1
                    ));
                } else {
                    report
                        .discrepancies
                        .push(format!("closed-form Ricci component {} differs", k + 1));
                }
            }
            // derived system vs the printed equations, up to Q(n) scalars
            let sys = einstein_system(
                &d,
                &[(0, 1), (1, 3), (3, 2)],
                &[("x23", RatFunc::from_rat(rat(1)))],
                case_id,
            )?;
            let printed = printed_metric7_system(&sys.equations[0].ctx)?;
            match_up_to_scalar(
                &sys.equations,
                &printed,
                &["f1", "f2", "f3"],
                &mut report,
            );
            // specialized printed Ricci display vs the closed forms
            let printed_r = printed_metric7_ricci()?;
            for (k, (p, c)) in printed_r.iter().zip(&closed).enumerate() {
                if p.equal(c)? {
                    report.matches.push(format!(
                        "printed specialized Ricci component {} agrees with the closed form",
                        k + 1
                    ));
                } else {
                    let diff = p.sub(c)?;
                    report.discrepancies.push(format!(
                        "printed specialized Ricci component {} differs from the closed \
                         form by ({}) / ({})",
                        k + 1,
                        diff.num,
                        diff.den
                    ));
                }
            }
            // the printed specialized display is inconsistent with the printed
            // system; the closed forms are not
            let eq_from_printed =
                equations_from_ratios(&printed_r, &[(0, 1), (1, 3), (3, 2)], &[(
                    "x23",
                    RatFunc::from_rat(rat(1)),
                )])?;
            let any_match = eq_from_printed
                .iter()
                .zip(&printed)
                .all(|(a, b)| scalar_ratio(a, b).is_some());
            if any_match {
                report
                    .discrepancies
                    .push("printed specialized display also reproduces the system".into());
            } else {
                report.matches.push(
                    "printed system follows from the closed forms but not from the \
                     printed specialized display: the 1/x2 coefficient is (k2-2) = 2, \
                     not 1, and the r12 middle factor is k3 = n-5, not n-4"
                        .into(),
                );
            }
            // alternate expansions of h2 / h3 agree
            let c12 = ctx(&["x12"], MonomialOrder::Lex);
            if paper_h2(&c12)? == paper_h2_shifted(&c12)? {
                report
                    .matches
                    .push("h2: expansion in n matches expansion in n-7".into());
            } else {
                report.discrepancies.push("h2 expansions disagree".into());
            }
            let c2 = ctx(&["x2"], MonomialOrder::Lex);
            let h3_delta = paper_h3(&c2)?.sub(&paper_h3_shifted(&c2)?)?;
            if h3_delta.is_zero() {
                report
                    .matches
                    .push("h3: expansion in n matches expansion in n-7".into());
            } else {
                // known sign misprint: the n-7 expansion prints -6536 (n-7)^9
                // inside the negated x2^5 bracket where +6536 is consistent
                // with the direct expansion and with the stated sign pattern
                let expected = parse_in(
                    "-13072*(n-7)^9*x2^5",
                    &c2,
                    &nconsts(),
                )?;
                if h3_delta == expected {
                    report.discrepancies.push(
                        "h3 alternate expansion differs from the direct expansion by \
                         -13072 (n-7)^9 x2^5: the printed -6536 (n-7)^9 term in the \
                         negated x2^5 bracket should read +6536 (n-7)^9"
                            .into(),
                    );
                } else {
                    report
                        .discrepancies
                        .push(format!("h3 expansions disagree by {h3_delta}"));
                }
            }
            // printed values of h1 at x13 = 0, 1, 2
            let c13 = ctx(&["x13"], MonomialOrder::Lex);
            let h1 = paper_h1(&c13)?;
            let vals = paper_h1_values();
            for (x, expect) in [(0i64, &vals[0]), (1, &vals[1]), (2, &vals[2])] {
                let at = h1
                    .evaluate_named(&[("x13", RatFunc::from_rat(rat(x)))])?;
                if ratfunc_to_npoly(&at).as_ref() == Some(expect) {
                    report
                        .matches
                        .push(format!("h1({x}) matches its printed closed form"));
                } else {
                    report
                        .discrepancies
                        .push(format!("h1({x}) differs from its printed closed form"));
                }
            }
        }
        "stiefel-metric6" => {
            let d = stiefel_decomposition(2, 3)?;
            let derived = ricci_components(&d)?;
            let closed = closed_ricci_parametric(2, 3)?;
            for (k, (a, b)) in derived.iter().zip(&closed).enumerate() {
                if a.equal(b)? {
                    report.matches.push(format!(
                        "closed-form Ricci component {} matches the derivation over Q(n)",
                        k + 1
                    ));
                } else {
                    report
                        .discrepancies
                        .push(format!("closed-form Ricci component {} differs", k + 1));
                }
            }
            let sys = einstein_system(
                &d,
                &[(0, 1), (0, 2), (0, 3), (3, 4)],
                &[("x23", RatFunc::from_rat(rat(1)))],
                case_id,
            )?;
            let printed = printed_metric6_system(&sys.equations[0].ctx)?;
            match_up_to_scalar(
                &sys.equations[1..],
                &printed[1..],
                &["g2", "g3", "g4"],
                &mut report,
            );
            // known misprint in g1: the printed tail +x12^2 - x13^2 should
            // read -x12^2 x13^2; the printed version does not vanish at the
            // Jensen solutions, the derived equation does
            let g1_delta = sys.equations[0].sub(&printed[0])?;
            let expected =
                parse_in("-x12^2*x13^2 - x12^2 + x13^2", &sys.equations[0].ctx, &nconsts())?;
            if g1_delta.is_zero() {
                report
                    .matches
                    .push("derived r1 - r2 equation equals g1".into());
            } else if g1_delta == expected {
                report.discrepancies.push(
                    "g1 misprint: derived r1 - r2 equation differs from the printed g1 \
                     by -x12^2 x13^2 - x12^2 + x13^2, i.e. the printed tail \
                     +x12^2 - x13^2 should read -x12^2 x13^2"
                        .into(),
                );
            } else {
                report
                    .discrepancies
                    .push(format!("g1 differs unexpectedly by {g1_delta}"));
            }
            if paper_p1_at_1() == paper_p1_at_1_shifted() {
                report
                    .matches
                    .push("p1(1): factored form matches expansion in n-7".into());
            } else {
                report.discrepancies.push("p1(1) expansions disagree".into());
            }
        }
        "flag-Sp-B2b" => {
            let c = ctx(&["x1", "x2", "x3", "x4"], MonomialOrder::Lex);
            let sys = printed_sp_system(&c, &rat(4), &rat(2))?;
            let x3 = MultiPoly::var_named(c.clone(), "x3")?;
            if sys[0].substitute_named(&[("x1", x3)])?.is_zero() {
                report
                    .matches
                    .push("first equation carries the printed factor (x1 - x3)".into());
            } else {
                report
                    .discrepancies
                    .push("first equation does not vanish at x1 = x3".into());
            }
            if sys
                .iter()
                .all(|e| e.terms().iter().all(|(m, _)| m.total_degree() == 3))
            {
                report
                    .matches
                    .push("all three equations are homogeneous cubics".into());
            } else {
                report
                    .discrepancies
                    .push("an equation is not a homogeneous cubic".into());
            }
        }
        "flag-q2" | "flag-q3-A1(3)" | "wallach-SO" => {
            report.matches.push(
                "derivation-only case; covered by the oracle cross-checks".into(),
            );
        }
        other => return Err(Error::BadCase(format!("unknown case `{other}`"))),
    }
    Ok(report)
}

/// Run every transcription check.
pub fn verify_all_transcriptions() -> Result<Vec<TranscriptionReport>> {
    list_cases()
        .iter()
        .map(|(id, _)| verify_transcription(id))
        .collect()
}
