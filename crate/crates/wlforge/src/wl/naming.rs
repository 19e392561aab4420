//! Order-sensitive 64-bit fingerprints used as color names.

pub(crate) const TAG_VERTEX: u64 = 0x5645_5254_4558;
pub(crate) const TAG_1WL: u64 = 0x0031_574c;
pub(crate) const TAG_TUPLE: u64 = 0x54_5550_4c45;
pub(crate) const TAG_ROUND: u64 = 0x52_4f55_4e44;
pub(crate) const TAG_ENTRY: u64 = 0x45_4e54_5259;

#[inline]
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Absorbs a sequence of words; the result depends on order and length.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Fingerprint {
    state: u64,
    words: u64,
}

impl Fingerprint {
    #[inline]
    pub(crate) fn new(tag: u64) -> Self {
        Fingerprint { state: mix(tag ^ 0x9e37_79b9_7f4a_7c15), words: 0 }
    }

    #[inline]
    pub(crate) fn add(&mut self, word: u64) {
        self.state = mix(self.state.rotate_left(23) ^ mix(word.wrapping_add(0x632b_e59b_d9b4_e019)));
        self.words += 1;
    }

    #[inline]
    pub(crate) fn finish(self) -> u64 {
        mix(self.state ^ mix(self.words.wrapping_mul(0xd6e8_feb8_6659_fd93)))
    }
}

/// Round-0 name of an input color id.
pub(crate) fn initial_vertex(color: usize) -> u64 {
    let mut fp = Fingerprint::new(TAG_VERTEX);
    fp.add(color as u64);
    fp.finish()
}

/// Name of an ordered combination of names (one substituted tuple).
#[inline]
pub(crate) fn combine(parts: &[u64]) -> u64 {
    let mut fp = Fingerprint::new(TAG_ENTRY);
    for &p in parts {
        fp.add(p);
    }
    fp.finish()
}
