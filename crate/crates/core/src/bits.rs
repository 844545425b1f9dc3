//! Fixed-width bitsets used by the search engines.

/// Set of vertex indices below `64 * W`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Bits<const W: usize>(pub [u64; W]);

impl<const W: usize> Default for Bits<W> {
    fn default() -> Self {
        Bits([0; W])
    }
}

impl<const W: usize> Bits<W> {
    #[inline]
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut b = Self::zero();
        for x in it {
            b.insert(x);
        }
        b
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        self.0[x >> 6] |= 1 << (x & 63);
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        self.0[x >> 6] &= !(1 << (x & 63));
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.0[x >> 6] >> (x & 63) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn and(&self, o: &Self) -> Self {
        let mut r = *self;
        for k in 0..W {
            r.0[k] &= o.0[k];
        }
        r
    }

    #[inline]
    pub fn or(&self, o: &Self) -> Self {
        let mut r = *self;
        for k in 0..W {
            r.0[k] |= o.0[k];
        }
        r
    }

    #[inline]
    pub fn minus(&self, o: &Self) -> Self {
        let mut r = *self;
        for k in 0..W {
            r.0[k] &= !o.0[k];
        }
        r
    }

    #[inline]
    pub fn intersects(&self, o: &Self) -> bool {
        (0..W).any(|k| self.0[k] & o.0[k] != 0)
    }

    #[inline]
    pub fn is_subset(&self, o: &Self) -> bool {
        (0..W).all(|k| self.0[k] & !o.0[k] == 0)
    }

    #[inline]
    pub fn first(&self) -> Option<usize> {
        (0..W)
            .find(|&k| self.0[k] != 0)
            .map(|k| 64 * k + self.0[k].trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..W).flat_map(move |k| {
            let mut w = self.0[k];
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(64 * k + t)
                }
            })
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Growable bitset for constraint indices.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub(crate) struct DynBits(pub Vec<u64>);

impl DynBits {
    pub fn with_len(n: usize) -> Self {
        DynBits(vec![0; n.div_ceil(64)])
    }

    pub fn full(n: usize) -> Self {
        let mut b = Self::with_len(n);
        for x in 0..n {
            b.insert(x);
        }
        b
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        self.0[x >> 6] |= 1 << (x & 63);
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn count_and(&self, o: &DynBits) -> usize {
        self.0
            .iter()
            .zip(&o.0)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    #[inline]
    pub fn remove_all(&mut self, o: &DynBits) {
        for (a, b) in self.0.iter_mut().zip(&o.0) {
            *a &= !b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w0)| {
            let mut w = w0;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(64 * k + t)
                }
            })
        })
    }
}

/// Runs `$body` with `$w` bound to the smallest supported word count for
/// `$n` vertices, or evaluates `$fallback` when `$n` is too large.
macro_rules! with_width {
    ($n:expr, $w:ident => $body:expr, else $fallback:expr) => {{
        let n = $n;
        if n <= 64 {
            const $w: usize = 1;
            $body
        } else if n <= 128 {
            const $w: usize = 2;
            $body
        } else if n <= 256 {
            const $w: usize = 4;
            $body
        } else if n <= 512 {
            const $w: usize = 8;
            $body
        } else if n <= 1024 {
            const $w: usize = 16;
            $body
        } else {
            $fallback
        }
    }};
}
pub(crate) use with_width;

/// Largest vertex count the bitset engines accept.
pub const MAX_SEARCH_VERTICES: usize = 1024;
