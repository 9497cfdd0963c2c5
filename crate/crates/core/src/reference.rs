//! Published polynomial tables kept as the LaTeX strings they were printed
//! as, with a small parser to turn them into exact polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::ring::{ExactPoly, SqrtTwoScalar};

/// `Q_{k,0}` for `k = 0..=5`.
pub const OKAMOTO_N0: [&str; 6] = [
    "1",
    "1",
    "2 x^2+3",
    "8 x^6+60 x^4+90 x^2+135",
    "64 x^{12}+1344 x^{10}+9360 x^8+30240 x^6+56700 x^4+170100 x^2+127575",
    "1024 x^{20}+46080 x^{18}+817920 x^{16}+7603200 x^{14}+41731200 x^{12}+155675520 x^{10}+493970400 x^8+1886068800 x^6+5304568500 x^4+5304568500 x^2+3978426375",
];

/// `Q_{k,1}` for `k = 0..=5`.
pub const OKAMOTO_N1: [&str; 6] = [
    "1",
    "\\sqrt{2} x",
    "4 x^4+12 x^2-9",
    "\\sqrt{2}x(16 x^8+192 x^6+504 x^4-2835 )",
    "256 x^{16}+7680 x^{14}+80640 x^{12}+362880 x^{10}+453600 x^8-1905120 x^6-14288400 x^4-21432600 x^2+8037225",
    "\\sqrt{2}x( 4096 x^{24}+245760 x^{22}+5990400 x^{20}+77414400 x^{18}+569721600 x^{16}+2246952960 x^{14}+1600300800 x^{12}-35663846400 x^{10}-275837562000 x^8-1103350248000 x^6-1737776640600 x^4+3258331201125)",
];

/// `Q_{k,−1}` for `k = 0..=5`.
pub const OKAMOTO_NM1: [&str; 6] = [
    "2 x^2+3",
    "\\sqrt{2} x",
    "2 x^2-3",
    "\\sqrt{2}x( 4 x^4-45)",
    "32 x^{10}+240 x^8-720 x^6-5400 x^4-12150 x^2+6075",
    "\\sqrt{2}x( 256 x^{16}+6144 x^{14}+34560 x^{12}-138240 x^{10}-2138400 x^8-8553600 x^6-22453200 x^4+63149625)",
];

/// `P_{n;j}^{(1)}` up to an integer factor, indexed `[j−1][n]`.
pub const MODES_K1: [[&str; 5]; 3] = [
    [
        "1",
        "x(2 x^2+9)",
        "8 x^6-36 x^4-162 x^2+81",
        "x(16 x^8-432 x^6+1944 x^4+4860 x^2-10935)",
        "64 x^{12}-4032 x^{10}+73872 x^8-381024 x^6-306180 x^4+2755620 x^2-688905",
    ],
    [
        "4 x^4+12 x^2-9",
        "x \\left(8 x^6-84 x^4-126 x^2+567\\right)",
        "32 x^{10}-1200 x^8+10080 x^6-85050 x^2+25515",
        "x(64 x^{12}-4992 x^{10}+121680 x^8-1010880 x^6+1326780 x^4+7960680 x^2-8955765)",
        "256 x^{16}-33792 x^{14}+1587456 x^{12}-32617728 x^{10}+283551840 x^8-700539840 x^6-1576214640 x^4+4728643920 x^2-886620735",
    ],
    [
        "x(4 x^4-45)",
        "16 x^8-288 x^6+360 x^4+3240 x^2-1215",
        "x(32 x^{10}-1584 x^8+20592 x^6-49896 x^4-187110 x^2+280665 )",
        "128 x^{14}-12096 x^{12}+376992 x^{10}-4490640 x^8+15717240 x^6+23575860 x^4-106091370 x^2+22733865",
        "x(256 x^{16}-39168 x^{14}+2193408 x^{12}-56137536 x^{10}+661620960 x^8-2977294320 x^6+20096736660 x^2-15072552495)",
    ],
];

/// `P_{n;j}^{(3)}` up to an integer factor, indexed `[j−1][n]`.
pub const MODES_K3: [[&str; 5]; 3] = [
    [
        "8 x^6+60 x^4+90 x^2+135",
        "x(16 x^8+480 x^6+3528 x^4+7560 x^2+8505)",
        "64 x^{12}+2496 x^{10}+35280 x^8+211680 x^6+510300 x^4+510300 x^2-382725",
        "x(128 x^{14}+4416 x^{12}+58464 x^{10}+390960 x^8+1370520 x^6+2143260 x^4-2296350 x^2-10333575 )",
        "512 x^{18}+8448 x^{16}-32256 x^{14}-1126656 x^{12}-6516288 x^{10}-12247200 x^8-7348320 x^6+165337200 x^4+310007250 x^2-93002175",
    ],
    [
        "256 x^{16}+7680 x^{14}+80640 x^{12}+362880 x^{10}+453600 x^8-1905120 x^6-14288400 x^4-21432600 x^2+8037225",
        "x(512 x^{18}+3840 x^{16}-129024 x^{14}-1451520 x^{12}-2358720 x^{10}+24766560 x^8+106142400 x^6+445798080 x^4+208967850 x^2-940355325 )",
        "2048 x^{22}-58368 x^{20}-806400 x^{18}+13996800 x^{16}+131155200 x^{14}-240589440 x^{12}-4606580160 x^{10}-8438320800 x^8-39285955800 x^6+56421319500 x^4+197474618250 x^2-42315989625",
        "x(4096 x^{24}-319488 x^{22}+4773888 x^{20}+85432320 x^{18}-1369094400 x^{16}-8770083840 x^{14}+58205226240 x^{12}+430768316160 x^{10}-186041091600 x^8+1715208112800 x^6-14150466930600 x^4-19296091269000 x^2+21708102677625)",
        "16384 x^{28}-2310144 x^{26}+102371328 x^{24}-1135337472 x^{22}-22142647296 x^{20}+383543424000 x^{18}+1297481898240 x^{16}-21340876170240 x^{14}-79981334072640 x^{12}+351830022223680 x^{10}-222364480338000 x^8+5263973698183200 x^6+955156517815500 x^4-14327347767232500 x^2+2149102165084875",
    ],
    [
        "x(256 x^{16}+6144 x^{14}+34560 x^{12}-138240 x^{10}-2138400 x^8-8553600 x^6-22453200 x^4+63149625)",
        "1024 x^{20}-3072 x^{18}-407808 x^{16}-1797120 x^{14}+18506880 x^{12}+155675520 x^{10}+314344800 x^8+808315200 x^6-2778583500 x^4-6820159500 x^2+1705039875",
        "x(2048 x^{22}-89088 x^{20}-290304 x^{18}+27530496 x^{16}+66624768 x^{14}-1684126080 x^{12}-8355856320 x^{10}+6870679200 x^8+1717669800 x^6+378746190900 x^4+405799490250 x^2-608699235375)",
        "8192 x^{26}-798720 x^{24}+19353600 x^{22}+102574080 x^{20}-5769792000 x^{18}-629233920 x^{16}+391975718400 x^{14}+884443795200 x^{12}-6959998029600 x^{10}-3246395922000 x^8-95444040106800 x^6+14608781649000 x^4+295827828392250 x^2-49304638065375",
        "x(16384 x^{28}-2703360 x^{26}+149409792 x^{24}-2765905920 x^{22}-15309388800 x^{20}+819467228160 x^{18}-1871143545600 x^{16}-54521712645120 x^{14}+22612029854400 x^{12}+1482481454126400 x^{10}-1026139373859600 x^8+12480073465860000 x^6-27518561992221300 x^4-58968347126188500 x^2+44226260344641375)",
    ],
];

/// Okamoto table entry for `(k, n)` with `n ∈ {−1, 0, 1}`.
pub fn okamoto_entry(k: usize, n: i64) -> Option<&'static str> {
    let table = match n {
        0 => &OKAMOTO_N0,
        1 => &OKAMOTO_N1,
        -1 => &OKAMOTO_NM1,
        _ => return None,
    };
    table.get(k).copied()
}

/// Mode table entry for `k ∈ {1, 3}`, `j ∈ 1..=3`, `n ≤ 4`.
pub fn mode_entry(k: i64, j: u8, n: usize) -> Option<&'static str> {
    let table = match k {
        1 => &MODES_K1,
        3 => &MODES_K3,
        _ => return None,
    };
    table.get((j as usize).checked_sub(1)?)?.get(n).copied()
}

/// Parses sums of integer monomials, optionally wrapped as `√2·x·(…)`,
/// `x·(…)` or `x \left(…\right)`.
pub fn parse_latex_poly(src: &str) -> Result<ExactPoly> {
    let mut s: String = src
        .replace("\\left", "")
        .replace("\\right", "")
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect();
    let mut factor = ExactPoly::one();
    if let Some(rest) = s.strip_prefix("\\sqrt{2}") {
        factor = factor.scale(&SqrtTwoScalar::sqrt2());
        s = rest.to_string();
    }
    if let Some(inner) = s.strip_prefix("x(").and_then(|r| r.strip_suffix(')')) {
        factor = &factor * &ExactPoly::x();
        s = inner.to_string();
    }
    Ok(&factor * &parse_sum(&s)?)
}

fn parse_sum(s: &str) -> Result<ExactPoly> {
    let bad = || Error::Parse(format!("cannot read polynomial term in {s:?}"));
    let mut out = ExactPoly::zero();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = 1;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            sign = if bytes[i] == b'-' { -1 } else { 1 };
            i += 1;
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coeff: BigInt = if start == i {
            BigInt::from(1)
        } else {
            s[start..i].parse().map_err(|_| bad())?
        };
        let mut degree = 0usize;
        if i < bytes.len() && bytes[i] == b'x' {
            i += 1;
            degree = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let braced = i < bytes.len() && bytes[i] == b'{';
                if braced {
                    i += 1;
                }
                let e0 = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                degree = s[e0..i].parse().map_err(|_| bad())?;
                if braced {
                    if bytes.get(i) != Some(&b'}') {
                        return Err(bad());
                    }
                    i += 1;
                }
            }
        } else if start == i {
            return Err(bad());
        }
        let c = SqrtTwoScalar::from_rational(BigRational::from_integer(coeff * sign));
        out = &out + &ExactPoly::monomial(c, degree);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_and_wrapped_forms() {
        assert_eq!(parse_latex_poly("2 x^2+3").unwrap(), ExactPoly::from_ints(&[3, 0, 2]));
        assert_eq!(parse_latex_poly("1").unwrap(), ExactPoly::one());
        let w = parse_latex_poly("\\sqrt{2}x( 4 x^4-45)").unwrap();
        let want = ExactPoly::from_ints(&[0, -45, 0, 0, 0, 4]).scale(&SqrtTwoScalar::sqrt2());
        assert_eq!(w, want);
        let l = parse_latex_poly("x \\left(8 x^6-84 x^4-126 x^2+567\\right)").unwrap();
        assert_eq!(l.degree(), Some(7));
        assert_eq!(parse_latex_poly("x^{12}").unwrap().degree(), Some(12));
        assert!(parse_latex_poly("2y").is_err());
    }

    #[test]
    fn every_entry_parses_with_the_expected_degree() {
        use crate::okamoto::okamoto_degree;
        use crate::spectral::mode_degree;
        for k in 0..6 {
            for n in -1..=1 {
                let p = parse_latex_poly(okamoto_entry(k, n).unwrap()).unwrap();
                assert_eq!(p.degree(), Some(okamoto_degree(k as i64, n) as usize), "Q({k},{n})");
            }
        }
        for k in [1, 3] {
            for j in 1..=3u8 {
                for n in 0..5 {
                    let p = parse_latex_poly(mode_entry(k, j, n).unwrap()).unwrap();
                    assert_eq!(p.degree(), Some(mode_degree(k, j, n as i64) as usize));
                }
            }
        }
    }
}
