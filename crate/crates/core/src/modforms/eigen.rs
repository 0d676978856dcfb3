//! Normalized Hecke eigenforms, either computed at level one or ingested
//! from coefficient tables.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::Arc;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::arith::is_prime;
use crate::algebra::matrix::RatMatrix;
use crate::algebra::numfield::{FieldElement, NumberField};
use crate::algebra::poly::IntPoly;
use crate::algebra::zfactor::factor_over_z_with;
use crate::algebra::FactorOptions;

use super::basis::{hecke_matrix, miller_basis};
use super::ModFormError;

/// A character of `(Z/NZ)^×` taking values in the powers of a root of unity
/// `ζ` of the Hecke field: generator `g_i` maps to `ζ^{e_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nebentypus {
    modulus: u64,
    gens: Vec<(u64, u64)>,
    order: u64,
    zeta: FieldElement,
    /// Residue `x` ↦ exponent of `ζ` in `ε(x)`.
    table: HashMap<u64, u64>,
}

impl Nebentypus {
    pub fn trivial(field: &Arc<NumberField>, modulus: u64) -> Self {
        let table = (1..=modulus.max(1))
            .filter(|x| x.gcd(&modulus) == 1)
            .map(|x| (x % modulus.max(1), 0))
            .collect();
        Self {
            modulus,
            gens: Vec::new(),
            order: 1,
            zeta: FieldElement::one(field),
            table,
        }
    }

    /// `gens` are `(g_i, e_i)`; the `g_i` must generate `(Z/NZ)^×`, and the
    /// assignment must be a well-defined homomorphism.
    pub fn new(
        modulus: u64,
        gens: Vec<(u64, u64)>,
        order: u64,
        zeta: FieldElement,
    ) -> Result<Self, ModFormError> {
        let bad = |m: String| Err(ModFormError::InvalidForm(m));
        if modulus == 0 || order == 0 {
            return bad("modulus and order must be positive".into());
        }
        if zeta.pow(order as u32) != FieldElement::one(zeta.field()) {
            return bad(format!("zeta does not have order dividing {order}"));
        }
        if modulus == 1 {
            return Ok(Self {
                modulus,
                gens,
                order,
                zeta,
                table: HashMap::from([(0, 0)]),
            });
        }
        let mut table: HashMap<u64, u64> = HashMap::from([(1 % modulus, 0)]);
        let mut queue = VecDeque::from([1 % modulus]);
        while let Some(x) = queue.pop_front() {
            let ex = table[&x];
            for &(g, e) in &gens {
                let y = (x as u128 * g as u128 % modulus as u128) as u64;
                let ey = (ex + e) % order;
                match table.get(&y) {
                    Some(&old) if old != ey => {
                        return bad(format!("generator relations violated at {y}"))
                    }
                    Some(_) => {}
                    None => {
                        table.insert(y, ey);
                        queue.push_back(y);
                    }
                }
            }
        }
        let units = (1..modulus).filter(|x| x.gcd(&modulus) == 1).count();
        if table.len() != units {
            return bad(format!("generators do not generate (Z/{modulus}Z)^x"));
        }
        Ok(Self {
            modulus,
            gens,
            order,
            zeta,
            table,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn generators(&self) -> &[(u64, u64)] {
        &self.gens
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn zeta(&self) -> &FieldElement {
        &self.zeta
    }

    pub fn is_trivial(&self) -> bool {
        self.table.values().all(|&e| e == 0)
    }

    /// Exponent of `ζ` in `ε(x)`, `None` when `gcd(x, N) > 1`.
    pub fn exponent(&self, x: u64) -> Option<u64> {
        self.table.get(&(x % self.modulus.max(1))).copied()
    }

    pub fn value(&self, x: u64) -> Option<FieldElement> {
        self.exponent(x).map(|e| self.zeta.pow(e as u32))
    }
}

/// Normalized eigenform with coefficients in its Hecke field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenform {
    pub k: u64,
    pub level: u64,
    pub eps: Nebentypus,
    pub field: Arc<NumberField>,
    /// `a_0, …, a_prec` when the full expansion is known; empty for
    /// ingested forms.
    pub coeffs: Vec<FieldElement>,
    /// `a_p` for every prime up to `prec`.
    pub ap: BTreeMap<u64, FieldElement>,
    pub prec: u64,
}

impl Eigenform {
    /// Eigenform known only through `a_p` (level `N`, any character).
    pub fn ingested(
        k: u64,
        level: u64,
        eps: Nebentypus,
        field: &Arc<NumberField>,
        ap: BTreeMap<u64, FieldElement>,
    ) -> Result<Self, ModFormError> {
        if let Some((&p, _)) = ap.iter().find(|(&p, _)| !is_prime(p as u128)) {
            return Err(ModFormError::InvalidForm(format!("{p} is not prime")));
        }
        if let Some((&p, _)) = ap
            .iter()
            .find(|(_, a)| a.field().gen_poly() != field.gen_poly())
        {
            return Err(ModFormError::InvalidForm(format!(
                "a_{p} is in another field"
            )));
        }
        if let Some((&p, _)) = ap
            .iter()
            .find(|(&p, a)| !level.is_multiple_of(p) && !a.is_integral())
        {
            return Err(ModFormError::InvalidForm(format!("a_{p} is not integral")));
        }
        if eps.modulus() != level {
            return Err(ModFormError::InvalidForm(
                "character modulus differs from the level".into(),
            ));
        }
        let prec = ap.keys().next_back().copied().unwrap_or(0);
        Ok(Self {
            k,
            level,
            eps,
            field: field.clone(),
            coeffs: Vec::new(),
            ap,
            prec,
        })
    }

    pub fn ap(&self, p: u64) -> Option<&FieldElement> {
        self.ap.get(&p)
    }

    /// `a_n` when the full expansion is stored.
    pub fn coeff(&self, n: usize) -> Option<&FieldElement> {
        self.coeffs.get(n)
    }

    /// `ε(p)` as an element of the Hecke field.
    pub fn eps_value(&self, p: u64) -> Option<FieldElement> {
        self.eps.value(p)
    }
}

/// Nonzero vector in the kernel of a singular square matrix over a field.
fn kernel_vector(mut rows: Vec<Vec<FieldElement>>) -> Option<Vec<FieldElement>> {
    let n = rows.len();
    let field = rows[0][0].field().clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(pr) = (r..n).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].inverse().ok()?;
        rows[r] = rows[r]
            .iter()
            .map(|x| x.mul(&inv).expect("same field"))
            .collect();
        for i in 0..n {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = x.sub(&f.mul(y).expect("same field")).expect("same field");
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free = (0..n).find(|c| !pivots.contains(c))?;
    let mut v = vec![FieldElement::zero(&field); n];
    v[free] = FieldElement::one(&field);
    for (row, &pc) in pivots.iter().enumerate() {
        v[pc] = rows[row][free].neg();
    }
    Some(v)
}

/// Primes tried in turn for a Hecke operator with squarefree characteristic
/// polynomial.
pub const SEPARATING_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

/// Coefficient precision large enough for every separating-prime attempt.
pub fn default_precision(k: u64) -> usize {
    let d = super::basis::cusp_dimension(k as i64);
    (d * 13).max(100)
}

/// One eigenform per Galois orbit of level-one eigenforms of weight `k`,
/// in the order of the irreducible factors of the separating Hecke
/// polynomial.
pub fn eigenforms(k: u64, prec: usize) -> Result<Vec<Eigenform>, ModFormError> {
    eigenforms_with(k, prec, &FactorOptions::default())
}

pub fn eigenforms_with(
    k: u64,
    prec: usize,
    opts: &FactorOptions,
) -> Result<Vec<Eigenform>, ModFormError> {
    if k < 12 || k % 2 == 1 {
        return Ok(Vec::new());
    }
    let basis = miller_basis(k, prec)?;
    let d = basis.len();
    if d == 0 {
        return Ok(Vec::new());
    }
    let mut chosen: Option<(RatMatrix, IntPoly)> = None;
    for p in SEPARATING_PRIMES {
        let m = hecke_matrix(k, p, &basis)?;
        let cp = m
            .charpoly()
            .to_int()
            .expect("Hecke matrices on the Miller basis are integral");
        if cp.to_rat().is_squarefree() {
            chosen = Some((m, cp));
            break;
        }
    }
    let (m, cp) = chosen.ok_or(ModFormError::NonSeparating(k))?;
    let mut out = Vec::new();
    for (g, _) in factor_over_z_with(&cp, opts)? {
        let (field, alpha) = if g.deg() == 1 {
            let q = NumberField::rationals();
            let root = BigRational::from_integer(-g.coeff(0));
            (q.clone(), FieldElement::from_rational(&q, root))
        } else {
            let f = NumberField::new(g.clone())?;
            (f.clone(), FieldElement::generator(&f))
        };
        let rows: Vec<Vec<FieldElement>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let x = FieldElement::from_rational(&field, m.get(i, j).clone());
                        if i == j {
                            x.sub(&alpha).expect("same field")
                        } else {
                            x
                        }
                    })
                    .collect()
            })
            .collect();
        let v = kernel_vector(rows).ok_or(ModFormError::NonSeparating(k))?;
        // a_1 of the combination is v_0; it is nonzero for an eigenform.
        let inv = v[0].inverse().map_err(|_| ModFormError::NonSeparating(k))?;
        let v: Vec<FieldElement> = v.iter().map(|x| x.mul(&inv).expect("same field")).collect();
        let coeffs: Vec<FieldElement> = (0..=prec)
            .map(|n| {
                basis
                    .iter()
                    .zip(&v)
                    .fold(FieldElement::zero(&field), |acc, (f, c)| {
                        let a = f.coeff(n);
                        if a.is_zero() {
                            acc
                        } else {
                            acc.add(&c.scale(a)).expect("same field")
                        }
                    })
            })
            .collect();
        let ap = (2..=prec as u64)
            .filter(|&p| is_prime(p as u128))
            .map(|p| (p, coeffs[p as usize].clone()))
            .collect();
        out.push(Eigenform {
            k,
            level: 1,
            eps: Nebentypus::trivial(&field, 1),
            field,
            coeffs,
            ap,
            prec: prec as u64,
        });
    }
    Ok(out)
}
