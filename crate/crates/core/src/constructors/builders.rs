//! Composed builders: alteration under the sparsity constraints that force
//! cancellativity or union-freeness, followed by exact verification.

use crate::checkers::{check_cancellative, check_sparse, check_union_free, PropertyVerdict};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Partition, SparsityConstraint};

use super::exponents::predicted_exponents;
use super::alteration::{alteration_construct, AlterationOutcome, ConstructionParams};
use super::partite::partite_extract;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationRecord {
    pub check: String,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct BuildOutcome {
    pub hypergraph: Hypergraph,
    pub alteration: AlterationOutcome,
    /// Set for partite builds.
    pub partition: Option<Partition>,
    pub verifications: Vec<VerificationRecord>,
}

fn require(
    records: &mut Vec<VerificationRecord>,
    name: String,
    verdict: PropertyVerdict,
) -> Result<()> {
    records.push(VerificationRecord {
        check: name.clone(),
        holds: verdict.holds,
    });
    match verdict.certificate {
        None => Ok(()),
        Some(cert) => Err(Error::VerificationFailed(format!("{name}: {cert}"))),
    }
}

/// `[(t·r + x, t + 2), (2r − x − 1, 2)]` with `x = ⌈(2r − t − 1)/(t + 2)⌉`.
pub fn cancellative_constraints(r: usize, t: usize) -> Result<Vec<SparsityConstraint>> {
    if r < 3 || t < 3 {
        return Err(Error::InvalidParameter(format!(
            "cancellative builder needs r ≥ 3 and t ≥ 3 (got r={r}, t={t})"
        )));
    }
    let x = predicted_exponents(r, t)?.x.expect("t ≥ 3") as usize;
    Ok(vec![
        SparsityConstraint::new(r, t * r + x, t + 2)?,
        SparsityConstraint::new(r, 2 * r - x - 1, 2)?,
    ])
}

/// `[(t·r − r, t), (t·r, 2t)]`.
pub fn union_free_constraints(r: usize, t: usize) -> Result<Vec<SparsityConstraint>> {
    if r < 3 || t < 3 {
        return Err(Error::InvalidParameter(format!(
            "union-free builder needs r ≥ 3 and t ≥ 3 (got r={r}, t={t})"
        )));
    }
    Ok(vec![
        SparsityConstraint::new(r, t * r - r, t)?,
        SparsityConstraint::new(r, t * r, 2 * t)?,
    ])
}

/// A verified t-cancellative r-graph.
pub fn build_cancellative(n: usize, r: usize, t: usize, seed: u64, density: f64) -> Result<BuildOutcome> {
    let constraints = cancellative_constraints(r, t)?;
    let params = ConstructionParams::new(n, r, constraints, density, seed)?;
    let alteration = alteration_construct(&params)?;
    let h = alteration.hypergraph.clone();
    let mut verifications = Vec::new();
    for &c in &params.constraints {
        require(&mut verifications, format!("sparse{c}"), check_sparse(&h, c))?;
    }
    require(
        &mut verifications,
        format!("cancellative(t={t})"),
        check_cancellative(&h, t),
    )?;
    Ok(BuildOutcome {
        hypergraph: h,
        alteration,
        partition: None,
        verifications,
    })
}

/// A verified 2-cancellative (2k+1)-graph from the single constraint
/// `(4k + 2, 3)`.
pub fn build_2_cancellative_odd(n: usize, k: usize, seed: u64, density: f64) -> Result<BuildOutcome> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let r = 2 * k + 1;
    let c = SparsityConstraint::new(r, 4 * k + 2, 3)?;
    let params = ConstructionParams::new(n, r, vec![c], density, seed)?;
    let alteration = alteration_construct(&params)?;
    let h = alteration.hypergraph.clone();
    let mut verifications = Vec::new();
    require(&mut verifications, format!("sparse{c}"), check_sparse(&h, c))?;
    require(
        &mut verifications,
        "cancellative(t=2)".into(),
        check_cancellative(&h, 2),
    )?;
    Ok(BuildOutcome {
        hypergraph: h,
        alteration,
        partition: None,
        verifications,
    })
}

/// A verified r-partite t-union-free r-graph.
pub fn build_union_free(n: usize, r: usize, t: usize, seed: u64, density: f64) -> Result<BuildOutcome> {
    let constraints = union_free_constraints(r, t)?;
    let params = ConstructionParams::new(n, r, constraints, density, seed)?;
    let alteration = alteration_construct(&params)?;
    let (partition, h) = partite_extract(&alteration.hypergraph);
    let mut verifications = Vec::new();
    if let Some(e) = h.edges().iter().find(|e| !partition.is_crossing(e)) {
        return Err(Error::VerificationFailed(format!(
            "edge {:?} is not crossing",
            e.to_vertices()
        )));
    }
    for &c in &params.constraints {
        require(&mut verifications, format!("sparse{c}"), check_sparse(&h, c))?;
    }
    require(
        &mut verifications,
        format!("union-free(t={t})"),
        check_union_free(&h, t)?,
    )?;
    Ok(BuildOutcome {
        hypergraph: h,
        alteration,
        partition: Some(partition),
        verifications,
    })
}
