use super::field::{h_field, k_field, Layer};
use crate::error::Result;
use crate::net::{laplace_backward, laplace_forward, QNet, Site};

/// First edge where `K_1(i,j) = H(i+1,j)` (edge `'K'`) or
/// `H_{-1}(i,j) = K(i,j+1)` (edge `'H'`) fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftMismatch {
    pub edge: char,
    pub site: Site,
}

/// Compare already computed layers: `h`, `k` of a net, `k_fwd` of its
/// forward transform and `h_bwd` of its backward transform.
pub fn hk_shift_mismatch(h: &Layer, k: &Layer, k_fwd: &Layer, h_bwd: &Layer) -> Option<ShiftMismatch> {
    for (&(i, j), v) in k_fwd {
        if let Some(w) = h.get(&(i + 1, j)) {
            if v != w {
                return Some(ShiftMismatch { edge: 'K', site: (i, j) });
            }
        }
    }
    for (&(i, j), v) in h_bwd {
        if let Some(w) = k.get(&(i, j + 1)) {
            if v != w {
                return Some(ShiftMismatch { edge: 'H', site: (i, j) });
            }
        }
    }
    None
}

/// Both shift identities at every edge where both sides exist.
pub fn hk_shift_check(net: &QNet) -> Result<bool> {
    let fwd = laplace_forward(net)?;
    let bwd = laplace_backward(net)?;
    let k_fwd = if fwd.is_nondegenerate() { k_field(&fwd)? } else { Layer::new() };
    let h_bwd = if bwd.is_nondegenerate() { h_field(&bwd)? } else { Layer::new() };
    Ok(hk_shift_mismatch(&h_field(net)?, &k_field(net)?, &k_fwd, &h_bwd).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::scalar::int;

    #[test]
    fn corrupted_layer_is_caught() {
        let h = Layer::from([((1, 0), int(3))]);
        let k = Layer::from([((0, 1), int(5))]);
        let k_fwd = Layer::from([((0, 0), int(3))]);
        let h_bwd = Layer::from([((0, 0), int(5))]);
        assert_eq!(hk_shift_mismatch(&h, &k, &k_fwd, &h_bwd), None);
        let bad = Layer::from([((0, 0), int(4))]);
        assert_eq!(
            hk_shift_mismatch(&h, &k, &k_fwd, &bad),
            Some(ShiftMismatch { edge: 'H', site: (0, 0) })
        );
    }
}
