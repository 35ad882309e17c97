use std::fmt;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::identities::{Field, MAX_N};
use crate::numerics::{Complex, PI};

/// How one complex field is drawn.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Draw {
    /// Uniform on the open-closed real interval (lo, hi].
    Real {
        lo: f64,
        hi: f64,
    },
    Rect {
        re: (f64, f64),
        im: (f64, f64),
    },
    /// |z| uniform in [r_min, r_max], argument uniform.
    Annulus {
        r_min: f64,
        r_max: f64,
    },
    /// Uniform on the closed disk of the given radius.
    Disk {
        radius: f64,
    },
    /// exp(2^-n w) with w uniform on the disk of the given radius.
    LogScaled {
        radius: f64,
    },
    /// Uniform integer in [lo, hi], as a real complex number.
    Integer {
        lo: i64,
        hi: i64,
    },
    /// `first` with probability p, else `second`.
    Either {
        p: f64,
        first: Box<Draw>,
        second: Box<Draw>,
    },
}

impl Draw {
    pub fn validate(&self) -> Result<()> {
        let ok = |b: bool, what: &str| {
            if b {
                Ok(())
            } else {
                Err(Error::Config(format!("bad region: {what} in {self}")))
            }
        };
        let interval = |lo: f64, hi: f64| lo.is_finite() && hi.is_finite() && lo <= hi;
        match self {
            Draw::Real { lo, hi } => ok(interval(*lo, *hi) && lo < hi, "empty interval"),
            Draw::Rect { re, im } => ok(
                interval(re.0, re.1) && interval(im.0, im.1),
                "empty rectangle",
            ),
            Draw::Annulus { r_min, r_max } => {
                ok(interval(*r_min, *r_max) && *r_min >= 0.0, "bad radii")
            }
            Draw::Disk { radius } | Draw::LogScaled { radius } => {
                ok(radius.is_finite() && *radius >= 0.0, "bad radius")
            }
            Draw::Integer { lo, hi } => ok(lo <= hi, "empty integer range"),
            Draw::Either { p, first, second } => {
                ok((0.0..=1.0).contains(p), "probability outside [0, 1]")?;
                first.validate()?;
                second.validate()
            }
        }
    }

    pub fn sample(&self, rng: &mut ChaCha8Rng, n: u32) -> Complex {
        match self {
            Draw::Real { lo, hi } => Complex::new(hi - rng.gen::<f64>() * (hi - lo), 0.0),
            Draw::Rect { re, im } => Complex::new(span(rng, re.0, re.1), span(rng, im.0, im.1)),
            Draw::Annulus { r_min, r_max } => {
                Complex::from_polar(span(rng, *r_min, *r_max), rng.gen_range(-PI..PI))
            }
            Draw::Disk { radius } => disk(rng, *radius),
            Draw::LogScaled { radius } => (disk(rng, *radius) * (-(n as f64)).exp2()).exp(),
            Draw::Integer { lo, hi } => Complex::new(rng.gen_range(*lo..=*hi) as f64, 0.0),
            Draw::Either { p, first, second } => {
                if rng.gen::<f64>() < *p {
                    first.sample(rng, n)
                } else {
                    second.sample(rng, n)
                }
            }
        }
    }
}

fn span(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    if lo == hi {
        lo
    } else {
        rng.gen_range(lo..=hi)
    }
}

fn disk(rng: &mut ChaCha8Rng, radius: f64) -> Complex {
    Complex::from_polar(radius * rng.gen::<f64>().sqrt(), rng.gen_range(-PI..PI))
}

impl fmt::Display for Draw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Draw::Real { lo, hi } => write!(f, "real ({lo}, {hi}]"),
            Draw::Rect { re, im } => write!(f, "re [{}, {}] im [{}, {}]", re.0, re.1, im.0, im.1),
            Draw::Annulus { r_min, r_max } => write!(f, "|.| in [{r_min}, {r_max}]"),
            Draw::Disk { radius } => write!(f, "|.| <= {radius}"),
            Draw::LogScaled { radius } => write!(f, "exp(2^-n w), |w| <= {radius}"),
            Draw::Integer { lo, hi } => write!(f, "integer [{lo}, {hi}]"),
            Draw::Either { p, first, second } => write!(f, "{first} (p={p}) or {second}"),
        }
    }
}

/// Per-field draws plus the range for n.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Region {
    pub n: Option<(u32, u32)>,
    pub fields: Vec<(Field, Draw)>,
}

impl Region {
    pub fn new(n: Option<(u32, u32)>, fields: Vec<(Field, Draw)>) -> Self {
        Region { n, fields }
    }

    /// Errors unless the region covers exactly the fields of `schema`.
    pub fn validate_for(&self, schema: &[Field]) -> Result<()> {
        let wants_n = schema.contains(&Field::N);
        match (wants_n, self.n) {
            (true, None) => return Err(Error::Config("region lacks a range for n".into())),
            (false, Some(_)) => {
                return Err(Error::Config("region has n but schema does not".into()))
            }
            (true, Some((lo, hi))) if lo > hi || hi > MAX_N => {
                return Err(Error::Config(format!("bad n range [{lo}, {hi}]")));
            }
            _ => {}
        }
        for (f, d) in &self.fields {
            if *f == Field::N || !schema.contains(f) {
                return Err(Error::Config(format!(
                    "region draws field {f} not in schema"
                )));
            }
            d.validate()?;
        }
        for f in schema.iter().filter(|f| **f != Field::N) {
            let hits = self.fields.iter().filter(|(g, _)| g == f).count();
            if hits != 1 {
                return Err(Error::Config(format!(
                    "region must draw field {f} exactly once"
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .fields
            .iter()
            .map(|(k, d)| format!("{k}: {d}"))
            .collect();
        if let Some((lo, hi)) = self.n {
            parts.push(format!("n: [{lo}, {hi}]"));
        }
        f.write_str(&parts.join("; "))
    }
}

fn real(lo: f64, hi: f64) -> Draw {
    Draw::Real { lo, hi }
}

fn rect(re: (f64, f64), im: (f64, f64)) -> Draw {
    Draw::Rect { re, im }
}

/// The sampling region used when nothing else is requested.
pub fn default_region(id: &str) -> Result<Region> {
    use Field::*;
    let upper_m = rect((0.2, 2.5), (0.5, 2.0));
    let k = rect((-3.0, 3.0), (-2.0, 2.0));
    let line = real(0.2, 2.5);
    let r = match id {
        "ID-00" => Region::new(
            Some((0, 10)),
            vec![(
                M,
                Draw::Annulus {
                    r_min: 0.1,
                    r_max: 3.0,
                },
            )],
        ),
        "ID-01" => Region::new(
            Some((0, 8)),
            vec![(A, Draw::LogScaled { radius: 1.0 }), (M, upper_m), (K, k)],
        ),
        "ID-02" | "ID-02-PRUDNIKOV-ORIGINAL" => Region::new(Some((0, 10)), vec![(M, line)]),
        "ID-03" => Region::new(Some((0, 10)), vec![(M, line.clone()), (R, line)]),
        "ID-04" => Region::new(
            None,
            vec![
                (Z, Draw::Disk { radius: 0.8 }),
                (S, rect((-2.0, 3.0), (-2.0, 2.0))),
                (A, rect((0.5, 4.0), (-1.0, 1.0))),
            ],
        ),
        "ID-05" | "ID-06" | "ID-15" => Region::new(Some((0, 10)), vec![(X, line)]),
        "ID-07" | "ID-08" | "ID-09" => Region::new(Some((0, 8)), vec![(A, real(2.1, 8.0))]),
        "ID-10" => Region::new(None, vec![(A, real(2.1, 8.0))]),
        "ID-11" => Region::new(Some((1, 10)), vec![(X, real(0.05, 0.95))]),
        "ID-12" => Region::new(None, vec![(X, real(0.05, 0.95))]),
        "ID-13" => Region::new(Some((0, 6)), vec![(A, real(2.1, 6.0))]),
        "ID-14" => Region::new(
            Some((0, 10)),
            vec![
                (M, upper_m),
                (
                    K,
                    Draw::Either {
                        p: 0.8,
                        first: Box::new(Draw::Integer { lo: -2, hi: 3 }),
                        second: Box::new(k),
                    },
                ),
            ],
        ),
        other => return Err(Error::UnknownIdentity(other.to_string())),
    };
    Ok(r)
}
