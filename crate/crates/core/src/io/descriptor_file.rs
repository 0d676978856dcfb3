use std::sync::Arc;

use num_bigint::BigUint;

use crate::algebra::numfield::{FieldElement, NumberField};
use crate::algebra::poly::IntPoly;
use crate::engine::descriptor::{
    LocalDescriptorU, LocalDescriptorV, RepDescriptor, SemistableFlag,
};
use crate::tame::TameCharacter;
use crate::weil::CharPolyOverE;

use super::{header, join, parse_ints, parse_list, parse_one, parse_rationals, Fields, ParseError};

const KEYS: [&str; 12] = [
    "field.genpoly",
    "n",
    "b",
    "e_cap",
    "v.q",
    "v.charpoly",
    "u.ell",
    "u.e",
    "u.ht",
    "u.tame",
    "flags.semistable_v",
    "flags.semistable_u",
];

/// Reads a descriptor, enforcing every descriptor invariant.
pub fn parse_descriptor(text: &str) -> Result<RepDescriptor, ParseError> {
    let lines: Vec<&str> = text.lines().collect();
    let (records, _) = header(&lines, &KEYS, |_| false)?;
    let fields = Fields {
        records,
        end: lines.len() + 1,
    };

    let g = fields.get("field.genpoly")?;
    let field = NumberField::new(IntPoly::new(parse_ints(g.value, g.line)?))
        .map_err(|e| ParseError::new(g.line, e.to_string()))?;
    let (n, n_line) = fields.parse::<usize>("n")?;
    let (b, _) = fields.parse::<u64>("b")?;
    let (e_cap, _) = fields.parse::<u64>("e_cap")?;
    let (q, q_line) = fields.parse::<u64>("v.q")?;
    let q_prime = crate::algebra::arith::prime_power(q)
        .map(|(p, _)| p)
        .ok_or_else(|| ParseError::new(q_line, format!("{q} is not a prime power")))?;

    let c = fields.get("v.charpoly")?;
    let coeffs = c
        .value
        .split(';')
        .map(|el| element(&field, el, c.line))
        .collect::<Result<Vec<_>, _>>()?;
    let charpoly = CharPolyOverE::new(&field, coeffs, q)
        .map_err(|e| ParseError::new(c.line, e.to_string()))?;
    if charpoly.degree() != n {
        return Err(ParseError::new(
            c.line,
            format!("degree {} does not match n = {n}", charpoly.degree()),
        ));
    }

    let (ell, ell_line) = fields.parse::<u128>("u.ell")?;
    if !crate::algebra::arith::is_prime(ell) {
        return Err(ParseError::new(ell_line, format!("{ell} is not prime")));
    }
    if q_prime as u128 == ell {
        return Err(ParseError::new(
            q_line,
            format!("q = {q} is a power of ell"),
        ));
    }
    let (e_u, _) = fields.parse::<u64>("u.e")?;
    let h = fields.get("u.ht")?;
    let ht = parse_list::<u64>(h.value, h.line, "weight")?;
    let t = fields.get("u.tame")?;
    let tame_chars = if t.value.is_empty() {
        Vec::new()
    } else {
        t.value
            .split(';')
            .map(|pair| tame(ell, pair, t.line))
            .collect::<Result<Vec<_>, _>>()?
    };
    let (semistable_at_v, _) = fields.parse::<bool>("flags.semistable_v")?;
    let (flag, _) = fields.parse::<SemistableFlag>("flags.semistable_u")?;

    let at_v = LocalDescriptorV {
        q,
        charpoly,
        semistable_at_v,
    };
    let at_u = LocalDescriptorU {
        ell,
        e_u,
        e_cap,
        ht,
        tame_chars,
        flag,
    };
    RepDescriptor::new(n, &field, b, at_v, at_u).map_err(|e| ParseError::new(n_line, e.to_string()))
}

fn element(field: &Arc<NumberField>, s: &str, line: usize) -> Result<FieldElement, ParseError> {
    let coords = parse_rationals(s, line)?;
    if coords.is_empty() || coords.len() > field.degree() {
        return Err(ParseError::new(
            line,
            format!("element {s:?} needs 1 to {} coordinates", field.degree()),
        ));
    }
    FieldElement::new(field, coords).map_err(|e| ParseError::new(line, e.to_string()))
}

fn tame(ell: u128, pair: &str, line: usize) -> Result<TameCharacter, ParseError> {
    let (h, d) = pair
        .split_once(':')
        .ok_or_else(|| ParseError::new(line, format!("expected h:d, found {pair:?}")))?;
    let h = parse_one::<u32>(h, line, "level")?;
    let d = parse_one::<BigUint>(d, line, "exponent")?;
    TameCharacter::new(ell, h, d).map_err(|e| ParseError::new(line, e.to_string()))
}

/// Canonical text: keys in a fixed order, every coordinate written out.
pub fn serialize_descriptor(desc: &RepDescriptor) -> String {
    let field = desc.field();
    let coords = |x: &FieldElement| {
        let mut c = x.coords().to_vec();
        c.resize(field.degree(), num_traits::Zero::zero());
        join(&c, ",")
    };
    let u = desc.at_u();
    let tame: Vec<String> = u
        .tame_chars
        .iter()
        .map(|t| format!("{}:{}", t.level(), t.exponent()))
        .collect();
    let values = [
        join(field.gen_poly().coeffs(), ","),
        desc.n().to_string(),
        desc.b().to_string(),
        u.e_cap.to_string(),
        desc.q().to_string(),
        desc.charpoly()
            .coeffs()
            .iter()
            .map(coords)
            .collect::<Vec<_>>()
            .join(";"),
        u.ell.to_string(),
        u.e_u.to_string(),
        join(&u.ht, ","),
        tame.join(";"),
        desc.at_v().semistable_at_v.to_string(),
        u.flag.to_string(),
    ];
    KEYS.iter()
        .zip(values)
        .map(|(k, v)| {
            if v.is_empty() {
                format!("{k} =\n")
            } else {
                format!("{k} = {v}\n")
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = "field.genpoly = 0,1
n = 1
b = 3
e_cap = 1
v.q = 3
v.charpoly = -27;1
u.ell = 7
u.e = 1
u.ht = 3
u.tame = 1:3
flags.semistable_v = true
flags.semistable_u = crystalline
";

    #[test]
    fn minimal_round_trip() {
        let d = parse_descriptor(MINIMAL).unwrap();
        assert_eq!(d.n(), 1);
        assert_eq!(d.charpoly().to_string(), "T - 27");
        assert_eq!(serialize_descriptor(&d), MINIMAL);
    }

    #[test]
    fn errors_name_the_line() {
        let missing = MINIMAL.replace("n = 1\n", "");
        let e = parse_descriptor(&missing).unwrap_err();
        assert!(e.reason.contains("\"n\""));
        assert_eq!(e.line, 12);
        let unknown = format!("{MINIMAL}colour = red\n");
        assert_eq!(parse_descriptor(&unknown).unwrap_err().line, 13);
        let not_prime = MINIMAL.replace("u.ell = 7", "u.ell = 9");
        assert_eq!(parse_descriptor(&not_prime).unwrap_err().line, 7);
        let wrong_degree = MINIMAL.replace("-27;1", "1;0;1");
        assert_eq!(parse_descriptor(&wrong_degree).unwrap_err().line, 6);
        let bad_flag = MINIMAL.replace("crystalline", "smooth");
        assert_eq!(parse_descriptor(&bad_flag).unwrap_err().line, 12);
        let over_ell = MINIMAL
            .replace("v.q = 3", "v.q = 7")
            .replace("-27;1", "-343;1");
        assert_eq!(parse_descriptor(&over_ell).unwrap_err().line, 5);
    }

    #[test]
    fn quadratic_field_and_comments() {
        let text = "# Q(i)\nfield.genpoly = 1,0,1\nn = 1\nb = 0\ne_cap = 1\nv.q = 5\n\
                    v.charpoly = -2,-1;1\nu.ell = 3\nu.e = 1\nu.ht = 0,0\nu.tame =\n\
                    flags.semistable_v = true\nflags.semistable_u = after-extension:2\n";
        let d = parse_descriptor(text).unwrap();
        assert_eq!(d.field().degree(), 2);
        assert_eq!(d.at_u().flag, SemistableFlag::AfterExtension(2));
        let again = parse_descriptor(&serialize_descriptor(&d)).unwrap();
        assert_eq!(again, d);
    }
}
