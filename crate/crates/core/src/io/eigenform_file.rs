use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::numfield::{FieldElement, NumberField};
use crate::algebra::poly::IntPoly;
use crate::modforms::eigen::{Eigenform, Nebentypus};

use super::{header, join, parse_ints, parse_list, parse_one, parse_rationals, Fields, ParseError};

const KEYS: [&str; 7] = [
    "k",
    "N",
    "eps",
    "eps.order",
    "eps.zeta",
    "field.genpoly",
    "denom",
];

/// Data lines start with a digit; everything before them is the header.
fn is_data(text: &str) -> bool {
    text.starts_with(|c: char| c.is_ascii_digit())
}

/// Reads an eigenform table: header keys, then one `p c_0,…,c_{d-1}` line
/// per prime in increasing order, where `a_p = Σ c_i α^i / denom`.
pub fn parse_eigenform(text: &str) -> Result<Eigenform, ParseError> {
    let lines: Vec<&str> = text.lines().collect();
    let (records, data_start) = header(&lines, &KEYS, is_data)?;
    let fields = Fields {
        records,
        end: data_start + 1,
    };
    let (k, _) = fields.parse::<u64>("k")?;
    let (level, level_line) = fields.parse::<u64>("N")?;
    if level == 0 {
        return Err(ParseError::new(level_line, "level must be positive"));
    }
    let g = fields.get("field.genpoly")?;
    let field = NumberField::new(IntPoly::new(parse_ints(g.value, g.line)?))
        .map_err(|e| ParseError::new(g.line, e.to_string()))?;
    let (denom, denom_line) = fields.parse::<BigInt>("denom")?;
    if !denom.is_positive() {
        return Err(ParseError::new(denom_line, "denominator must be positive"));
    }

    let e = fields.get("eps")?;
    let gens = parse_list::<String>(e.value, e.line, "generator")?
        .iter()
        .map(|pair| {
            let (g, x) = pair
                .split_once(':')
                .ok_or_else(|| ParseError::new(e.line, format!("expected g:e, found {pair:?}")))?;
            Ok((
                parse_one::<u64>(g, e.line, "generator")?,
                parse_one::<u64>(x, e.line, "exponent")?,
            ))
        })
        .collect::<Result<Vec<_>, ParseError>>()?;
    let eps =
        if gens.is_empty() && fields.opt("eps.order").is_none() && fields.opt("eps.zeta").is_none()
        {
            Nebentypus::trivial(&field, level)
        } else {
            let (order, _) = fields.parse::<u64>("eps.order")?;
            let z = fields.get("eps.zeta")?;
            let zeta = FieldElement::new(&field, parse_rationals(z.value, z.line)?)
                .map_err(|err| ParseError::new(z.line, err.to_string()))?;
            if gens.is_empty() && order == 1 && zeta.is_one() {
                Nebentypus::trivial(&field, level)
            } else {
                Nebentypus::new(level, gens, order, zeta)
                    .map_err(|err| ParseError::new(e.line, err.to_string()))?
            }
        };

    let mut ap = BTreeMap::new();
    let mut last = 0u64;
    for (idx, raw) in lines.iter().enumerate().skip(data_start) {
        let line = idx + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let (p, coords) = text.split_once(char::is_whitespace).ok_or_else(|| {
            ParseError::new(line, format!("expected `p coordinates`, found {text:?}"))
        })?;
        let p = parse_one::<u64>(p, line, "prime")?;
        if p <= last {
            return Err(ParseError::new(
                line,
                format!("prime {p} does not follow {last}"),
            ));
        }
        last = p;
        let coords = parse_ints(coords, line)?;
        if coords.is_empty() || coords.len() > field.degree() {
            return Err(ParseError::new(
                line,
                format!("a_{p} needs 1 to {} coordinates", field.degree()),
            ));
        }
        let coords = coords
            .into_iter()
            .map(|c| BigRational::new(c, denom.clone()))
            .collect();
        let a = FieldElement::new(&field, coords)
            .map_err(|err| ParseError::new(line, err.to_string()))?;
        ap.insert(p, a);
    }
    Eigenform::ingested(k, level, eps, &field, ap)
        .map_err(|err| ParseError::new(level_line, err.to_string()))
}

/// Canonical text with the smallest common denominator.
pub fn serialize_eigenform(f: &Eigenform) -> String {
    let d = f.field.degree();
    let denom =
        f.ap.values()
            .flat_map(|a| a.coords().iter().map(|c| c.denom().clone()))
            .fold(BigInt::one(), |acc, x| acc.lcm(&x));
    let mut out = String::new();
    out.push_str(&format!("k = {}\nN = {}\n", f.k, f.level));
    let gens: Vec<String> = f
        .eps
        .generators()
        .iter()
        .map(|(g, e)| format!("{g}:{e}"))
        .collect();
    if gens.is_empty() && f.eps.order() == 1 {
        out.push_str("eps =\n");
    } else {
        let mut zeta = f.eps.zeta().coords().to_vec();
        zeta.resize(d, BigRational::zero());
        out.push_str(&format!(
            "eps = {}\neps.order = {}\neps.zeta = {}\n",
            gens.join(","),
            f.eps.order(),
            join(&zeta, ",")
        ));
    }
    out.push_str(&format!(
        "field.genpoly = {}\ndenom = {denom}\n",
        join(f.field.gen_poly().coeffs(), ",")
    ));
    for (p, a) in &f.ap {
        let mut c: Vec<BigInt> = a
            .coords()
            .iter()
            .map(|x| (x * BigRational::from_integer(denom.clone())).to_integer())
            .collect();
        c.resize(d, BigInt::zero());
        out.push_str(&format!("{p} {}\n", join(&c, ",")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const CURVE: &str = "k = 2
N = 11
eps =
field.genpoly = 0,1
denom = 1
2 -2
3 -1
5 1
7 -2
11 1
";

    #[test]
    fn level_eleven_round_trip() {
        let f = parse_eigenform(CURVE).unwrap();
        assert_eq!(f.level, 11);
        assert_eq!(f.ap.len(), 5);
        assert_eq!(f.prec, 11);
        assert_eq!(serialize_eigenform(&f), CURVE);
    }

    #[test]
    fn character_and_denominator() {
        let text = "k = 3\nN = 5\neps = 2:1\neps.order = 2\neps.zeta = -1\nfield.genpoly = 0,1\ndenom = 1\n2 0\n3 0\n";
        let f = parse_eigenform(text).unwrap();
        assert_eq!(
            f.eps_value(2).unwrap(),
            FieldElement::from_i64(&f.field, -1)
        );
        assert_eq!(f.eps_value(4).unwrap(), FieldElement::from_i64(&f.field, 1));
        assert_eq!(serialize_eigenform(&f), text);
        let half = "k = 2\nN = 1\neps =\nfield.genpoly = -5,0,1\ndenom = 2\n2 1,1\n";
        let f = parse_eigenform(half).unwrap();
        assert_eq!(serialize_eigenform(&f), half);
    }

    #[test]
    fn malformed_tables() {
        let unsorted = CURVE.replace("3 -1\n5 1", "5 1\n3 -1");
        assert_eq!(parse_eigenform(&unsorted).unwrap_err().line, 8);
        let late_key = format!("{CURVE}denom = 2\n");
        assert!(parse_eigenform(&late_key).is_err());
        let composite = CURVE.replace("11 1", "12 1");
        assert!(parse_eigenform(&composite).is_err());
        let missing = CURVE.replace("denom = 1\n", "");
        assert_eq!(parse_eigenform(&missing).unwrap_err().line, 5);
    }
}
