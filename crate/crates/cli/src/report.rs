//! Structured reports. Field order is declaration order, every exact
//! quantity is a rational string, and nothing depends on timing or thread
//! scheduling.

use serde::Serialize;

use toric_stability::ehrhart::EhrhartReport;
use toric_stability::exact::membership::{Membership, MembershipCertificate};
use toric_stability::exact::rational::{format_rational, Int, Rational};
use toric_stability::secondary::SecondaryPolytope;
use toric_stability::stability::{weight_polytope_h, TheoremReport};
use toric_stability::subdivision::{Regularity, Subdivision};

pub fn q(r: &Rational) -> String {
    format_rational(r)
}

pub fn qs(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn zs(v: &[Int]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

#[derive(Serialize)]
pub struct ValidateReport {
    pub name: String,
    pub dimension: usize,
    pub points: usize,
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<String>,
}

#[derive(Serialize)]
pub struct FoldingRowOut {
    pub cell: usize,
    pub label: usize,
    pub multiplier: String,
}

#[derive(Serialize)]
pub struct TriangulationOut {
    pub index: usize,
    pub cells: String,
    pub gkz: Vec<String>,
    pub regular: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub heights: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub non_regularity_certificate: Option<Vec<FoldingRowOut>>,
}

#[derive(Serialize)]
pub struct VertexOut {
    pub triangulation: usize,
    pub gkz: Vec<String>,
}

#[derive(Serialize)]
pub struct FacetOut {
    pub subdivision: String,
    pub heights: Vec<String>,
    pub functional: Vec<String>,
    pub relation: &'static str,
    pub constant: String,
    pub negated: bool,
    pub tight: Vec<usize>,
}

#[derive(Serialize)]
pub struct SubdivisionOut {
    pub heights: Vec<String>,
    pub cells: String,
    pub is_triangulation: bool,
}

#[derive(Serialize)]
pub struct SecondaryReport {
    pub name: String,
    pub triangulation_count: usize,
    pub regular_count: usize,
    pub dimension: usize,
    pub expected_dimension: usize,
    pub vertices: Vec<VertexOut>,
    pub facet_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triangulations: Option<Vec<TriangulationOut>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<FacetOut>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subdivision: Option<SubdivisionOut>,
}

impl SecondaryReport {
    pub fn new(
        name: &str,
        n: usize,
        sp: &SecondaryPolytope,
        triangulations: bool,
        facets: bool,
    ) -> Self {
        let labels = sp.triangulations.first().map_or(0, |t| t.gkz.len());
        SecondaryReport {
            name: name.to_string(),
            triangulation_count: sp.triangulations.len(),
            regular_count: sp.regular_count(),
            dimension: sp.dim(),
            expected_dimension: labels - 1 - n,
            vertices: sp
                .vertex_triangulations
                .iter()
                .map(|&i| VertexOut {
                    triangulation: i,
                    gkz: zs(&sp.triangulations[i].gkz),
                })
                .collect(),
            facet_count: sp.hull.h.facets.len(),
            triangulations: triangulations.then(|| {
                sp.triangulations
                    .iter()
                    .enumerate()
                    .map(|(index, e)| {
                        let (heights, cert) = match &e.regularity {
                            Regularity::Regular(w) => (Some(qs(w.values())), None),
                            Regularity::NonRegular(rows) => (
                                None,
                                Some(
                                    rows.iter()
                                        .map(|(r, y)| FoldingRowOut {
                                            cell: r.cell,
                                            label: r.label,
                                            multiplier: q(y),
                                        })
                                        .collect(),
                                ),
                            ),
                        };
                        TriangulationOut {
                            index,
                            cells: e.triangulation.to_string(),
                            gkz: zs(&e.gkz),
                            regular: e.regularity.is_regular(),
                            heights,
                            non_regularity_certificate: cert,
                        }
                    })
                    .collect()
            }),
            facets: facets.then(|| {
                sp.coarse
                    .iter()
                    .map(|c| FacetOut {
                        subdivision: c.subdivision.to_string(),
                        heights: qs(c.heights.values()),
                        functional: qs(&c.equation.functional),
                        relation: ">=",
                        constant: q(&c.equation.constant),
                        negated: c.equation.negated,
                        tight: c.equation.tight.clone(),
                    })
                    .collect()
            }),
            subdivision: None,
        }
    }

    pub fn with_subdivision(mut self, heights: &[Rational], s: &Subdivision) -> Self {
        self.subdivision = Some(SubdivisionOut {
            heights: qs(heights),
            cells: s.to_string(),
            is_triangulation: s.is_triangulation(),
        });
        self
    }
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CertificateOut {
    /// Coefficients over `vertices`.
    Combination {
        vertices: Vec<Vec<String>>,
        coefficients: Vec<String>,
    },
    Separation {
        normal: Vec<String>,
        offset: String,
    },
}

impl CertificateOut {
    fn new(m: &Membership, vertices: &[Vec<Rational>]) -> Self {
        match &m.certificate {
            MembershipCertificate::Combination(c) => CertificateOut::Combination {
                vertices: vertices.iter().map(|v| qs(v)).collect(),
                coefficients: qs(c),
            },
            MembershipCertificate::Separation { normal, offset } => CertificateOut::Separation {
                normal: qs(normal),
                offset: q(offset),
            },
        }
    }
}

#[derive(Serialize)]
pub struct TheoremOut {
    pub status: &'static str,
    pub labels: usize,
    pub bound: String,
    pub labels_equal_bound: bool,
    pub facet_count: usize,
    pub diagonal_facets: Vec<usize>,
    pub projection_injective: bool,
    pub interior_consistent: bool,
    pub certificates_valid: bool,
}

#[derive(Serialize)]
pub struct StabilityOut {
    pub name: String,
    pub degree: String,
    pub t: String,
    pub diagonal_location: &'static str,
    pub diagonal_in_boundary: bool,
    pub semistable: bool,
    pub polystable: bool,
    pub origin_location: &'static str,
    pub certificate: CertificateOut,
    pub theorem: TheoremOut,
}

impl StabilityOut {
    pub fn new(name: &str, sp: &SecondaryPolytope, th: &TheoremReport) -> Self {
        let s = &th.stability;
        let nh = weight_polytope_h(sp);
        StabilityOut {
            name: name.to_string(),
            degree: s.degree.to_string(),
            t: q(&s.diagonal_t),
            diagonal_location: s.diagonal_location.as_str(),
            diagonal_in_boundary: s.diagonal_in_boundary,
            semistable: s.semistable,
            polystable: s.polystable,
            origin_location: s.origin.location.as_str(),
            certificate: CertificateOut::new(&s.origin, &nh.vertices),
            theorem: TheoremOut {
                status: th.status.as_str(),
                labels: th.labels,
                bound: th.bound.to_string(),
                labels_equal_bound: th.labels_equal_bound,
                facet_count: th.facet_count,
                diagonal_facets: th.diagonal_facets.clone(),
                projection_injective: th.projection_injective,
                interior_consistent: th.interior_consistent,
                certificates_valid: th.certificates_valid,
            },
        }
    }
}

#[derive(Serialize)]
pub struct EhrhartChecksOut {
    pub leading_is_volume: bool,
    pub h0_is_one: bool,
    pub h1_counts_points: bool,
    pub sum_is_normalized_volume: bool,
    pub nonnegative: bool,
    pub bound_holds: bool,
    pub equality_consistent: bool,
}

#[derive(Serialize)]
pub struct EhrhartOut {
    pub name: String,
    pub coefficients: Vec<String>,
    pub values: Vec<String>,
    pub held_out: String,
    pub h_vector: Vec<String>,
    pub volume: String,
    pub card: String,
    pub bound: String,
    pub equality: bool,
    pub unimodular_simplex: bool,
    pub checks: EhrhartChecksOut,
}

impl EhrhartOut {
    pub fn new(name: &str, r: &EhrhartReport) -> Self {
        EhrhartOut {
            name: name.to_string(),
            coefficients: qs(&r.polynomial.coefficients),
            values: zs(&r.polynomial.values),
            held_out: r.polynomial.held_out.to_string(),
            h_vector: zs(&r.h.0),
            volume: q(&r.volume),
            card: r.bound.card.to_string(),
            bound: r.bound.bound.to_string(),
            equality: r.bound.equality,
            unimodular_simplex: r.bound.is_unimodular_simplex,
            checks: EhrhartChecksOut {
                leading_is_volume: r.leading_is_volume,
                h0_is_one: r.h0_is_one,
                h1_counts_points: r.h1_counts_points,
                sum_is_normalized_volume: r.sum_is_normalized_volume,
                nonnegative: r.nonnegative,
                bound_holds: r.bound.holds,
                equality_consistent: r.equality_consistent,
            },
        }
    }
}

#[derive(Serialize)]
pub struct CorpusEntry {
    pub file: String,
    pub status: &'static str,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub validate: Option<ValidateReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub secondary: Option<SecondaryReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stability: Option<StabilityOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ehrhart: Option<EhrhartOut>,
}

#[derive(Serialize)]
pub struct CorpusReport {
    pub documents: Vec<CorpusEntry>,
    pub total: usize,
    pub succeeded: usize,
    pub failed: usize,
}

pub fn render<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}
