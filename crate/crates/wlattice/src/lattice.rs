//! Cartan data for sl_n, the ordered variable chain, and the log-canonical
//! bracket/commutation coefficient rules everything else derives from.

use crate::error::{Error, Result};
use crate::ring::{scalar_from_i64, Scalar, VarId};
use serde_json::{json, Map, Value};
use std::fmt;

/// Rank data: n (as in sl_n) and the Cartan matrix A_{n-1}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeSpec {
    n: u32,
    cartan: Vec<Vec<i64>>,
}

impl LatticeSpec {
    /// Build the lattice for sl_n (n >= 2): tridiagonal A_{n-1} with 2 on the
    /// diagonal and -1 on the off-diagonals; for n = 2 the 1x1 matrix (2).
    pub fn new(n: u32) -> Result<LatticeSpec> {
        if n < 2 {
            return Err(Error::InvalidRank(n as i64));
        }
        let m = (n - 1) as usize;
        let cartan = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        if i == j {
                            2
                        } else if i.abs_diff(j) == 1 {
                            -1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(LatticeSpec { n, cartan })
    }

    pub fn rank(&self) -> u32 {
        self.n
    }

    /// Number of simple-root families (colors): n - 1.
    pub fn families(&self) -> u32 {
        self.n - 1
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_entry(&self, i: u32, j: u32) -> i64 {
        self.cartan[i as usize][j as usize]
    }

    pub fn check_family(&self, family: u32) -> Result<()> {
        if family >= self.families() {
            return Err(Error::InvalidFamily {
                family,
                rank: self.n,
            });
        }
        Ok(())
    }

    /// A validated variable of this lattice.
    pub fn var(&self, family: u32, site: u32) -> Result<VarId> {
        self.check_family(family)?;
        if site < 1 {
            return Err(Error::InvalidInput("site must be >= 1".into()));
        }
        Ok(VarId::new(family, site))
    }

    /// Chain position: (site - 1)(n - 1) + family.
    pub fn position(&self, v: VarId) -> u64 {
        (v.site as u64 - 1) * (self.families() as u64) + v.family as u64
    }

    /// The variable at a given chain position.
    pub fn var_at(&self, position: u64) -> VarId {
        let m = self.families() as u64;
        VarId::new((position % m) as u32, (position / m + 1) as u32)
    }

    pub(crate) fn coeff_i64(&self, u: VarId, v: VarId) -> i64 {
        if u == v {
            return 0;
        }
        let fu = u.family as usize;
        let fv = v.family as usize;
        debug_assert!(fu < self.cartan.len() && fv < self.cartan.len());
        let a = self.cartan[fu][fv];
        if self.position(u) < self.position(v) {
            a
        } else {
            -a
        }
    }

    /// Poisson coefficient c(u, v), meaning {u, v} = c(u, v) u v.
    ///
    /// Equals the Cartan entry a_{fam(u), fam(v)} when u precedes v on the
    /// chain, its negative when it follows, and 0 on the diagonal.
    pub fn poisson_coeff(&self, u: VarId, v: VarId) -> Scalar {
        scalar_from_i64(self.coeff_i64(u, v))
    }

    /// q-commutation exponent e with u v = q^e v u in the quantum ring:
    /// 2 for same family with pos(u) < pos(v), -1 for adjacent families with
    /// pos(u) < pos(v), 0 for non-adjacent pairs and on the diagonal;
    /// antisymmetric under swapping u and v.
    pub fn q_exponent(&self, u: VarId, v: VarId) -> i64 {
        if u == v {
            return 0;
        }
        let e = if u.family == v.family {
            2
        } else if u.family.abs_diff(v.family) == 1 {
            -1
        } else {
            0
        };
        if self.position(u) < self.position(v) {
            e
        } else {
            -e
        }
    }

    /// The map advancing every variable k steps along the chain.
    pub fn shift_map(&self, k: u64) -> ChainShift {
        ChainShift {
            families: self.families(),
            steps: k,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("n".into(), json!(self.n));
        obj.insert(
            "cartan".into(),
            Value::Array(
                self.cartan
                    .iter()
                    .map(|row| Value::Array(row.iter().map(|&e| json!(e)).collect()))
                    .collect(),
            ),
        );
        Value::Object(obj)
    }

    pub fn from_json(v: &Value) -> Result<LatticeSpec> {
        let n = v
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing integer field \"n\"".into()))?;
        let spec = LatticeSpec::new(n as u32)?;
        if let Some(c) = v.get("cartan") {
            let got: Option<Vec<Vec<i64>>> = c.as_array().map(|rows| {
                rows.iter()
                    .filter_map(|r| {
                        r.as_array()
                            .map(|xs| xs.iter().filter_map(Value::as_i64).collect())
                    })
                    .collect()
            });
            if got.as_deref() != Some(&spec.cartan) {
                return Err(Error::Parse("cartan matrix does not match rank".into()));
            }
        }
        Ok(spec)
    }
}

impl fmt::Display for LatticeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "sl_{} lattice, Cartan matrix A_{}:", self.n, self.n - 1)?;
        for row in &self.cartan {
            let cells: Vec<String> = row.iter().map(|e| format!("{e:>2}")).collect();
            writeln!(f, "  [ {} ]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Chain advance by a fixed number of positions; usable wherever a
/// variable-to-variable map is expected.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ChainShift {
    families: u32,
    steps: u64,
}

impl ChainShift {
    pub fn apply(&self, v: VarId) -> VarId {
        let m = self.families as u64;
        let p = (v.site as u64 - 1) * m + v.family as u64 + self.steps;
        VarId::new((p % m) as u32, (p / m + 1) as u32)
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::var;

    #[test]
    fn cartan_matrices() {
        assert_eq!(LatticeSpec::new(2).unwrap().cartan(), &[vec![2]]);
        assert_eq!(
            LatticeSpec::new(3).unwrap().cartan(),
            &[vec![2, -1], vec![-1, 2]]
        );
        // printed A_4 is malformed in the source table; standard form applies
        assert_eq!(
            LatticeSpec::new(5).unwrap().cartan(),
            &[
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 2]
            ]
        );
        assert!(matches!(LatticeSpec::new(1), Err(Error::InvalidRank(1))));
    }

    #[test]
    fn poisson_coeff_examples() {
        let s2 = LatticeSpec::new(2).unwrap();
        assert_eq!(s2.coeff_i64(var(0, 1), var(0, 2)), 2);
        let s3 = LatticeSpec::new(3).unwrap();
        assert_eq!(s3.coeff_i64(var(0, 2), var(1, 1)), 1); // {X_i, Y_j} = +X_iY_j for i > j
        assert_eq!(s3.coeff_i64(var(0, 1), var(1, 2)), -1);
        let s4 = LatticeSpec::new(4).unwrap();
        assert_eq!(s4.coeff_i64(var(0, 1), var(2, 3)), 0); // X and Z commute
        assert_eq!(s4.coeff_i64(var(1, 1), var(1, 1)), 0);
    }

    #[test]
    fn full_rule_tables_match_definitions() {
        // every printed low-rank bracket rule, as a table over a site window
        for n in 2..=5u32 {
            let spec = LatticeSpec::new(n).unwrap();
            for fu in 0..spec.families() {
                for fv in 0..spec.families() {
                    for su in 1..=5u32 {
                        for sv in 1..=5u32 {
                            let u = var(fu, su);
                            let v = var(fv, sv);
                            let c = spec.coeff_i64(u, v);
                            let expect = if u == v {
                                0
                            } else if fu == fv {
                                if su < sv {
                                    2
                                } else if su > sv {
                                    -2
                                } else {
                                    0
                                }
                            } else if fu.abs_diff(fv) != 1 {
                                0 // includes the sl5 Y-K pair: non-adjacent families commute
                            } else {
                                // adjacent families: site rule i > j gives +1 w.r.t. the
                                // lower-family variable appearing first
                                let (lo_site, hi_site, swap) = if fu < fv {
                                    (su, sv, false)
                                } else {
                                    (sv, su, true)
                                };
                                let v_low_first = lo_site <= hi_site; // pos(lower family) < pos
                                let c_low_hi = if v_low_first { -1 } else { 1 };
                                if swap {
                                    -c_low_hi
                                } else {
                                    c_low_hi
                                }
                            };
                            assert_eq!(c, expect, "n={n} {u} {v}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn antisymmetry_and_q_consistency() {
        let spec = LatticeSpec::new(4).unwrap();
        let vars: Vec<VarId> = (0..3u32)
            .flat_map(|f| (1..=5u32).map(move |s| var(f, s)))
            .collect();
        for &u in &vars {
            for &v in &vars {
                assert_eq!(spec.coeff_i64(u, v), -spec.coeff_i64(v, u));
                assert_eq!(spec.q_exponent(u, v), -spec.q_exponent(v, u));
                assert_eq!(spec.coeff_i64(u, v) != 0, spec.q_exponent(u, v) != 0);
                if spec.position(u) < spec.position(v) {
                    let a = spec.cartan_entry(u.family, v.family);
                    assert_eq!(spec.coeff_i64(u, v).signum(), a.signum());
                }
            }
        }
    }

    #[test]
    fn q_exponent_examples() {
        let s3 = LatticeSpec::new(3).unwrap();
        assert_eq!(s3.q_exponent(var(0, 1), var(0, 2)), 2);
        assert_eq!(s3.q_exponent(var(0, 1), var(1, 2)), -1);
        let s5 = LatticeSpec::new(5).unwrap();
        assert_eq!(s5.q_exponent(var(1, 2), var(3, 1)), 0); // y and k commute
    }

    #[test]
    fn shift_map_examples() {
        let s3 = LatticeSpec::new(3).unwrap();
        let sh = s3.shift_map(1);
        assert_eq!(sh.apply(var(0, 1)), var(1, 1)); // X1 -> Y1
        assert_eq!(sh.apply(var(1, 1)), var(0, 2)); // Y1 -> X2
        assert_eq!(sh.apply(var(0, 2)), var(1, 2)); // X2 -> Y2
        assert_eq!(s3.shift_map(0).apply(var(1, 3)), var(1, 3));
        let s4 = LatticeSpec::new(4).unwrap();
        let sh = s4.shift_map(1);
        assert_eq!(sh.apply(var(0, 1)), var(1, 1));
        assert_eq!(sh.apply(var(1, 1)), var(2, 1));
        assert_eq!(sh.apply(var(2, 1)), var(0, 2));
    }

    #[test]
    fn shift_composition() {
        let spec = LatticeSpec::new(4).unwrap();
        for k1 in 0..5u64 {
            for k2 in 0..5u64 {
                for f in 0..3u32 {
                    for s in 1..=6u32 {
                        let v = var(f, s);
                        let a = spec.shift_map(k2).apply(spec.shift_map(k1).apply(v));
                        let b = spec.shift_map(k1 + k2).apply(v);
                        assert_eq!(a, b);
                    }
                }
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        let spec = LatticeSpec::new(3).unwrap();
        let j = spec.to_json();
        assert_eq!(
            serde_json::to_string(&j).unwrap(),
            r#"{"cartan":[[2,-1],[-1,2]],"n":3}"#
        );
        assert_eq!(LatticeSpec::from_json(&j).unwrap(), spec);
    }
}
