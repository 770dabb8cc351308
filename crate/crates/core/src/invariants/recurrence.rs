use num_traits::{One, Zero};

use super::field::{InvariantField, Layer};
use crate::error::{Error, Result};
use crate::net::Site;
use crate::projective::Scalar;

fn value(layer: &Layer, site: Site) -> Result<&Scalar> {
    layer.get(&site).ok_or(Error::MissingValue(site))
}

/// `1 - 1/x`, refusing `x = 0` and `x = 1`.
fn one_minus_recip(x: &Scalar, site: Site) -> Result<Scalar> {
    if x.is_zero() || x.is_one() {
        return Err(Error::RecurrenceSingular(site));
    }
    Ok(Scalar::one() - x.recip())
}

fn recip(x: &Scalar, site: Site) -> Result<Scalar> {
    if x.is_zero() {
        return Err(Error::RecurrenceSingular(site));
    }
    Ok(x.recip())
}

/// `lead⁻¹ · (1 - X(i+1,j))/(1 - X⁻¹(i,j)) · (1 - X(i,j+1))/(1 - X⁻¹(i+1,j+1))`
/// for the layer `X`; shared by all the recurrence forms.
fn step(lead: (&Scalar, Site), layer: &Layer, (i, j): Site) -> Result<Scalar> {
    let right = value(layer, (i + 1, j))?;
    let here = value(layer, (i, j))?;
    let up = value(layer, (i, j + 1))?;
    let diag = value(layer, (i + 1, j + 1))?;
    Ok(recip(lead.0, lead.1)?
        * (Scalar::one() - right)
        * (Scalar::one() - up)
        / one_minus_recip(here, (i, j))?
        / one_minus_recip(diag, (i + 1, j + 1))?)
}

/// Next `H` value at `site` from the `H` of the backward transform and the
/// current `H`.
pub fn recurrence_step(h_prev: &Layer, h_cur: &Layer, site: Site) -> Result<Scalar> {
    let lead = value(h_prev, site)?;
    step((lead, site), h_cur, site)
}

/// Every site where [`recurrence_step`] has its inputs.
pub fn recurrence_layer(h_prev: &Layer, h_cur: &Layer) -> Result<Layer> {
    let mut out = Layer::new();
    for &(i, j) in h_prev.keys() {
        let needed = [(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)];
        if needed.iter().all(|s| h_cur.contains_key(s)) {
            out.insert((i, j), recurrence_step(h_prev, h_cur, (i, j))?);
        }
    }
    Ok(out)
}

/// `H` of the forward transform from the invariants of one net:
/// `K⁻¹(i,j+1) · (1-H(i+1,j))/(1-H⁻¹(i,j)) · (1-H(i,j+1))/(1-H⁻¹(i+1,j+1))`.
pub fn forward_recurrence(field: &InvariantField) -> Result<Layer> {
    let mut out = Layer::new();
    for &(i, j) in field.h.keys() {
        let lead_site = (i, j + 1);
        let needed = [(i + 1, j), (i, j + 1), (i + 1, j + 1)];
        if let (Some(lead), true) = (
            field.k.get(&lead_site),
            needed.iter().all(|s| field.h.contains_key(s)),
        ) {
            out.insert((i, j), step((lead, lead_site), &field.h, (i, j))?);
        }
    }
    Ok(out)
}

/// `K` of the backward transform:
/// `H⁻¹(i+1,j) · (1-K(i,j+1))/(1-K⁻¹(i,j)) · (1-K(i+1,j))/(1-K⁻¹(i+1,j+1))`.
pub fn backward_recurrence(field: &InvariantField) -> Result<Layer> {
    let mut out = Layer::new();
    for &(i, j) in field.k.keys() {
        let lead_site = (i + 1, j);
        let needed = [(i + 1, j), (i, j + 1), (i + 1, j + 1)];
        if let (Some(lead), true) = (
            field.h.get(&lead_site),
            needed.iter().all(|s| field.k.contains_key(s)),
        ) {
            out.insert((i, j), step((lead, lead_site), &field.k, (i, j))?);
        }
    }
    Ok(out)
}
