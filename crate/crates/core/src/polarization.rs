//! The parametrized hadronic vacuum-polarization function Re Π(−q²) as a
//! piecewise function of momentum, with loadable alternative parameter sets.
//!
//! Each momentum region carries constants (A, B, C) with
//! Re Π = A + B·ln(1 + C·q²); the builtin set is the seven-region fit with
//! edges {0, 0.7, 2, 4, 10, m_Z, 1e4, 1e5} GeV.

use crate::constants::M_Z_BOSON;
use crate::{Error, Result};
use std::path::Path;

/// One momentum region of the parameterization. `k_hi` is in GeV, `c` in GeV⁻².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Region {
    pub k_lo: f64,
    pub k_hi: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// Piecewise parameter set defining Re Π over momentum regions.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarizationParamSet {
    regions: Vec<Region>,
    label: String,
}

/// Loop contributions distinguished by the potentials module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoopSpecies {
    HadronicParametrized,
    ElectronLoop,
    MuonLoop,
}

impl PolarizationParamSet {
    /// Validated construction from regions; enforces ordering, contiguity,
    /// first edge zero, B ≥ 0 and C > 0.
    pub fn new(regions: Vec<Region>, label: impl Into<String>) -> Result<Self> {
        if regions.is_empty() {
            return Err(Error::InvariantViolation("no regions".into()));
        }
        if regions[0].k_lo != 0.0 {
            return Err(Error::InvariantViolation(format!(
                "first region must start at 0, starts at {}",
                regions[0].k_lo
            )));
        }
        for (i, reg) in regions.iter().enumerate() {
            if !(reg.k_hi > reg.k_lo) {
                return Err(Error::InvariantViolation(format!(
                    "region {i}: edges not increasing ({} .. {})",
                    reg.k_lo, reg.k_hi
                )));
            }
            if reg.b < 0.0 || reg.c <= 0.0 {
                return Err(Error::InvariantViolation(format!(
                    "region {i}: require B >= 0 and C > 0 (got B={}, C={})",
                    reg.b, reg.c
                )));
            }
            if i > 0 && (reg.k_lo - regions[i - 1].k_hi).abs() > 1e-12 * reg.k_lo.max(1.0) {
                return Err(Error::InvariantViolation(format!(
                    "region {i}: not contiguous ({} vs previous upper edge {})",
                    reg.k_lo,
                    regions[i - 1].k_hi
                )));
            }
        }
        Ok(PolarizationParamSet {
            regions,
            label: label.into(),
        })
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Region containing momentum q; above the last edge the final region's
    /// parameters are extended (atomic matrix elements never reach there).
    pub fn region_for(&self, q: f64) -> &Region {
        for reg in &self.regions {
            if q < reg.k_hi {
                return reg;
            }
        }
        self.regions.last().unwrap()
    }

    /// First-region constants (A₁, B₁, C₁) used by all closed-form potentials.
    pub fn first(&self) -> &Region {
        &self.regions[0]
    }
}

/// Builtin seven-region hadronic parameter set.
pub fn builtin_params() -> PolarizationParamSet {
    let rows = [
        (0.0, 0.7, 0.0, 0.0023092, 3.9925370),
        (0.7, 2.0, 0.0, 0.0022333, 4.2191779),
        (2.0, 4.0, 0.0, 0.0024402, 3.2496684),
        (4.0, 10.0, 0.0, 0.0027340, 2.0995092),
        (10.0, M_Z_BOSON, 0.0010485, 0.0029431, 1.0),
        (M_Z_BOSON, 1.0e4, 0.0012234, 0.0029237, 1.0),
        (1.0e4, 1.0e5, 0.0016894, 0.0028984, 1.0),
    ];
    let regions = rows
        .iter()
        .map(|&(k_lo, k_hi, a, b, c)| Region { k_lo, k_hi, a, b, c })
        .collect();
    PolarizationParamSet::new(regions, "burkhardt-2001").expect("builtin set is valid")
}

/// Re Π(−q²) of the piecewise parameterization at momentum q ≥ 0 (GeV).
pub fn re_pi_hadronic(q: f64, params: &PolarizationParamSet) -> f64 {
    let reg = params.region_for(q);
    reg.a + reg.b * (reg.c * q * q).ln_1p()
}

/// First-region parameters extended to all momenta: B₁·ln(1 + C₁q²).
pub fn re_pi_first_region(q: f64, params: &PolarizationParamSet) -> f64 {
    let reg = params.first();
    reg.a + reg.b * (reg.c * q * q).ln_1p()
}

/// Parse a parameter-set file.
///
/// Format (versioned, one region per line, `#` comments):
/// ```text
/// hadvp-params v1
/// label my-set
/// # k_lo  k_hi  A  B  C
/// 0.0  0.7  0.0  0.0023092  3.9925370
/// ...
/// ```
pub fn load_params(path: &Path) -> Result<PolarizationParamSet> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        path: path.display().to_string(),
        line: 0,
        message: e.to_string(),
    })?;
    parse_params(&text, &path.display().to_string())
}

/// Parse parameter-set text (see [`load_params`] for the format).
pub fn parse_params(text: &str, path: &str) -> Result<PolarizationParamSet> {
    let mut lines = text.lines().enumerate();
    let header = loop {
        match lines.next() {
            Some((_, l)) if l.trim().is_empty() || l.trim_start().starts_with('#') => continue,
            Some((i, l)) => break (i, l.trim()),
            None => {
                return Err(Error::Parse {
                    path: path.into(),
                    line: 0,
                    message: "empty file".into(),
                })
            }
        }
    };
    if header.1 != "hadvp-params v1" {
        return Err(Error::Parse {
            path: path.into(),
            line: header.0 + 1,
            message: format!("expected header 'hadvp-params v1', got '{}'", header.1),
        });
    }
    let mut label = String::from("unlabeled");
    let mut regions = Vec::new();
    for (i, raw) in lines {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("label") {
            label = rest.trim().to_string();
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 5 {
            return Err(Error::Parse {
                path: path.into(),
                line: i + 1,
                message: format!("expected 5 columns (k_lo k_hi A B C), got {}", fields.len()),
            });
        }
        let mut vals = [0.0f64; 5];
        for (j, f) in fields.iter().enumerate() {
            vals[j] = f.parse().map_err(|_| Error::Parse {
                path: path.into(),
                line: i + 1,
                message: format!("not a number: '{f}'"),
            })?;
        }
        regions.push(Region {
            k_lo: vals[0],
            k_hi: vals[1],
            a: vals[2],
            b: vals[3],
            c: vals[4],
        });
    }
    PolarizationParamSet::new(regions, label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn builtin_matches_published_rows() {
        let p = builtin_params();
        assert_eq!(p.regions().len(), 7);
        let r1 = p.regions()[0];
        assert_eq!((r1.a, r1.b, r1.c), (0.0, 0.0023092, 3.9925370));
        let r5 = p.regions()[4];
        assert_eq!((r5.a, r5.b, r5.c), (0.0010485, 0.0029431, 1.0));
        assert_eq!(r5.k_hi, M_Z_BOSON);
        assert_eq!(p.regions()[6].k_hi, 1.0e5);
        assert_eq!(p.label(), "burkhardt-2001");
    }

    #[test]
    fn re_pi_values() {
        let p = builtin_params();
        assert_eq!(re_pi_hadronic(0.0, &p), 0.0);
        // direct arithmetic on the first-region constants (mpmath)
        assert_relative_eq!(re_pi_hadronic(0.5, &p), 1.598_460_268_98e-3, max_relative = 1e-10);
        // q = 3 GeV sits in region 3
        let r3 = p.regions()[2];
        assert_relative_eq!(
            re_pi_hadronic(3.0, &p),
            r3.a + r3.b * (1.0 + r3.c * 9.0).ln(),
            max_relative = 1e-15
        );
        // clamp above the last edge
        assert_eq!(
            re_pi_hadronic(2.0e5, &p),
            p.regions()[6].a + p.regions()[6].b * (1.0 + p.regions()[6].c * 4.0e10).ln()
        );
    }

    #[test]
    fn first_region_extension() {
        let p = builtin_params();
        assert_eq!(re_pi_first_region(0.0, &p), 0.0);
        assert_relative_eq!(
            re_pi_first_region(5.0, &p),
            1.065_296_662_01e-2,
            max_relative = 1e-10
        );
        // differs from the piecewise value outside region 1
        assert!(re_pi_first_region(5.0, &p) != re_pi_hadronic(5.0, &p));
    }

    #[test]
    fn load_round_trip_and_errors() {
        let text = "\
hadvp-params v1
label restated-builtin
0.0 0.7 0.0 0.0023092 3.9925370
0.7 2.0 0.0 0.0022333 4.2191779
2.0 4.0 0.0 0.0024402 3.2496684
4.0 10.0 0.0 0.0027340 2.0995092
10.0 91.1876 0.0010485 0.0029431 1.0
91.1876 1.0e4 0.0012234 0.0029237 1.0
1.0e4 1.0e5 0.0016894 0.0028984 1.0
";
        let p = parse_params(text, "mem").unwrap();
        assert_eq!(p.regions(), builtin_params().regions());
        assert_eq!(p.label(), "restated-builtin");

        let unsorted = "hadvp-params v1\n0.0 2.0 0.0 1e-3 1.0\n1.0 3.0 0.0 1e-3 1.0\n";
        assert!(matches!(
            parse_params(unsorted, "mem"),
            Err(Error::InvariantViolation(_))
        ));
        let bad_header = "not-a-header\n";
        assert!(matches!(parse_params(bad_header, "mem"), Err(Error::Parse { .. })));
    }

    proptest! {
        #[test]
        fn monotone_within_region(qs in prop::collection::vec(0.0f64..0.69, 2)) {
            let p = builtin_params();
            let (a, b) = (qs[0].min(qs[1]), qs[0].max(qs[1]));
            prop_assert!(re_pi_hadronic(b, &p) >= re_pi_hadronic(a, &p));
        }

        #[test]
        fn first_region_agreement(q in 0.0f64..0.6999) {
            let p = builtin_params();
            prop_assert_eq!(re_pi_first_region(q, &p), re_pi_hadronic(q, &p));
        }
    }
}
