use super::{MixedRadix, Permutation, PermutationGroup};
use crate::{Error, Result};

/// Moves the entry at position `j` to position `h(j)`, i.e. the new tuple is
/// `(t_{1h⁻¹}, …, t_{rh⁻¹})`.
pub fn permute_coordinates<T: Copy>(h: &Permutation, tuple: &[T], out: &mut [T]) {
    for (j, &x) in tuple.iter().enumerate() {
        out[h.image(j)] = x;
    }
}

fn induced_on_tuples(h: &Permutation, codec: &MixedRadix) -> Permutation {
    let r = codec.arity();
    let mut t = vec![0; r];
    let mut s = vec![0; r];
    let images = (0..codec.size())
        .map(|idx| {
            codec.decode_into(idx, &mut t);
            permute_coordinates(h, &t, &mut s);
            codec.encode(&s) as u32
        })
        .collect();
    Permutation::from_raw(images)
}

/// Action of `top ≤ Sym(r)` on `X^r` by permuting coordinates, with
/// `|X| = x_size`.
pub fn rank_r_action(top: &PermutationGroup, x_size: usize) -> Result<PermutationGroup> {
    if x_size == 0 {
        return Err(Error::Range("x_size must be positive".into()));
    }
    let codec = MixedRadix::uniform(x_size, top.degree())?;
    let gens = top
        .generators()
        .iter()
        .map(|h| induced_on_tuples(h, &codec))
        .collect();
    PermutationGroup::new(codec.size(), gens)
}

/// `K ≀ H` in product action on `Δ^r`.
#[derive(Clone, Debug)]
pub struct WreathAction {
    inner: PermutationGroup,
    top: PermutationGroup,
    codec: MixedRadix,
    group: PermutationGroup,
}

impl WreathAction {
    pub fn inner(&self) -> &PermutationGroup {
        &self.inner
    }

    pub fn top(&self) -> &PermutationGroup {
        &self.top
    }

    pub fn codec(&self) -> &MixedRadix {
        &self.codec
    }

    pub fn group(&self) -> &PermutationGroup {
        &self.group
    }

    pub fn into_group(self) -> PermutationGroup {
        self.group
    }

    /// `m^r`.
    pub fn product_degree(&self) -> usize {
        self.codec.size()
    }

    /// `|K|^r · |H|`, from the orders of the factors. The product action is
    /// faithful for `m ≥ 2`, so this is the order of [`Self::group`].
    pub fn order(&self, cap: usize) -> Result<u128> {
        let k = self.inner.order(cap)? as u128;
        let h = self.top.order(cap)? as u128;
        let r = self.top.degree() as u32;
        k.checked_pow(r)
            .and_then(|x| x.checked_mul(h))
            .ok_or_else(|| Error::Overflow("wreath product order".into()))
    }
}

/// Generated by `r` coordinate copies of the generators of `inner` together
/// with the generators of `top` acting by coordinate permutation.
pub fn wreath_product_action(
    inner: &PermutationGroup,
    top: &PermutationGroup,
) -> Result<WreathAction> {
    let m = inner.degree();
    if m < 2 {
        return Err(Error::Range("inner degree must be at least 2".into()));
    }
    let r = top.degree();
    let codec = MixedRadix::uniform(m, r)?;
    let mut gens = Vec::new();
    let mut t = vec![0; r];
    for coord in 0..r {
        for k in inner.generators() {
            let images = (0..codec.size())
                .map(|idx| {
                    codec.decode_into(idx, &mut t);
                    t[coord] = k.image(t[coord]);
                    codec.encode(&t) as u32
                })
                .collect();
            gens.push(Permutation::from_raw(images));
        }
    }
    gens.extend(top.generators().iter().map(|h| induced_on_tuples(h, &codec)));
    let group = PermutationGroup::new(codec.size(), gens)?;
    Ok(WreathAction {
        inner: inner.clone(),
        top: top.clone(),
        codec,
        group,
    })
}
