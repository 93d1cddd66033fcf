//! Merging solved sectors into one globally sorted spectrum.

use serde::{Deserialize, Serialize};

use super::SpectralError;

/// One spectral line: eigenvalue, multiplicity, and the sector it came from.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SpectrumEntry {
    pub lambda: f64,
    pub multiplicity: u64,
    pub label: String,
}

/// Sorted eigenvalue list with multiplicities. Indexing counts multiplicity
/// with the first index 1, so `value_at_index(1)` is the bottom of the
/// spectrum. `truncation_lambda` is the completeness certificate: every
/// sector with a bottom bound at or below it was solved.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Spectrum {
    pub entries: Vec<SpectrumEntry>,
    pub truncation_lambda: f64,
}

/// A solved sector ready for assembly.
#[derive(Debug, Clone)]
pub struct SolvedSector {
    pub label: String,
    pub multiplicity: u64,
    pub eigenvalues: Vec<f64>,
}

impl Spectrum {
    /// Eigenvalue at 1-based index `k`, counting multiplicity.
    pub fn value_at_index(&self, k: u64) -> Option<f64> {
        let mut seen = 0u64;
        for e in &self.entries {
            seen += e.multiplicity;
            if seen >= k {
                return Some(e.lambda);
            }
        }
        None
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    /// Indexed expansion `(index, lambda, label)` up to `max_index`.
    pub fn indexed(&self, max_index: u64) -> Vec<(u64, f64, &str)> {
        let mut out = Vec::new();
        let mut idx = 0u64;
        'outer: for e in &self.entries {
            for _ in 0..e.multiplicity {
                idx += 1;
                if idx > max_index {
                    break 'outer;
                }
                out.push((idx, e.lambda, e.label.as_str()));
            }
        }
        out
    }

    /// Sum of multiplicities of entries with eigenvalue at most `cut`.
    pub fn multiplicity_below(&self, cut: f64) -> u64 {
        self.entries
            .iter()
            .take_while(|e| e.lambda <= cut)
            .map(|e| e.multiplicity)
            .sum()
    }
}

/// Sorts sector lines into a spectrum and certifies the first `k_needed`
/// indexed eigenvalues against the enumeration threshold: an eigenvalue
/// beyond the threshold could be displaced by a sector that was never
/// enumerated, so the certificate refuses to vouch for it.
pub fn assemble_spectrum(
    solved: Vec<SolvedSector>,
    truncation_lambda: f64,
    k_needed: u64,
) -> Result<Spectrum, SpectralError> {
    let mut entries: Vec<SpectrumEntry> = solved
        .into_iter()
        .flat_map(|s| {
            let label = s.label;
            let mult = s.multiplicity;
            s.eigenvalues
                .into_iter()
                .map(move |lambda| SpectrumEntry {
                    lambda,
                    multiplicity: mult,
                    label: label.clone(),
                })
                .collect::<Vec<_>>()
        })
        .collect();
    // Deterministic order regardless of solve order: eigenvalues rounded at
    // the reproducibility scale, then the sector label.
    entries.sort_by(|a, b| {
        let ka = (a.lambda * 1e12).round() as i128;
        let kb = (b.lambda * 1e12).round() as i128;
        ka.cmp(&kb).then_with(|| a.label.cmp(&b.label))
    });
    let spectrum = Spectrum {
        entries,
        truncation_lambda,
    };
    if k_needed > 0 {
        match spectrum.value_at_index(k_needed) {
            Some(v) if v <= truncation_lambda => {}
            Some(v) => {
                return Err(SpectralError::InsufficientCertificate {
                    lambda_max: truncation_lambda,
                    index: k_needed as usize,
                    required: v * 1.05,
                })
            }
            None => {
                return Err(SpectralError::InsufficientCertificate {
                    lambda_max: truncation_lambda,
                    index: k_needed as usize,
                    required: truncation_lambda * 2.0,
                })
            }
        }
    }
    Ok(spectrum)
}
