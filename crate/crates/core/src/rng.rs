//! Counter-based pseudo-random streams.
//!
//! Every replication, resample, and redraw gets its own [`StreamKey`]; a key
//! deterministically identifies an entire sequence of draws, independent of
//! which thread consumes it. Stream derivation is O(1) — no jump-ahead — so
//! work can be farmed out in any order while the numbers stay identical.

/// SplitMix64 finalizer: a bijective avalanche mix of a 64-bit word.
#[inline]
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Weyl increment (odd, 2^64 / golden ratio).
const GOLDEN: u64 = 0x9e37_79b9_7f4a_7c15;
/// Salt separating derived child seed-spaces from their parent's draws.
const CHILD_SALT: u64 = 0xd6e8_feb8_6659_fd93;

/// Identifies one deterministic stream of draws: a global seed plus a stream
/// index (replication number, resample number, ...).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StreamKey {
    pub seed: u64,
    pub stream_id: u64,
}

impl StreamKey {
    pub fn new(seed: u64, stream_id: u64) -> Self {
        StreamKey { seed, stream_id }
    }

    /// Initial generator state for this key. Both words are avalanched so
    /// that keys differing in one bit start in unrelated states.
    #[inline]
    fn base_state(self) -> u64 {
        mix64(mix64(self.seed ^ GOLDEN).wrapping_add(self.stream_id.wrapping_mul(0xbf58_476d_1ce4_e5b9)))
    }

    /// Open a fresh stream positioned at the first draw.
    pub fn stream(self) -> Stream {
        Stream { state: self.base_state(), cached_normal: None }
    }

    /// Derive the key of child stream `index`.
    ///
    /// Children live in a seed-space obtained by salting this key's base
    /// state, so `key.child(i)` never collides with `StreamKey::new(seed, j)`
    /// for top-level ids `j`, and children of distinct parents stay apart.
    pub fn child(self, index: u64) -> StreamKey {
        StreamKey { seed: mix64(self.base_state() ^ CHILD_SALT), stream_id: index }
    }
}

/// A stateful view over one key's sequence of draws.
#[derive(Debug, Clone)]
pub struct Stream {
    state: u64,
    cached_normal: Option<f64>,
}

impl Stream {
    /// Next raw word: SplitMix64 over a Weyl sequence.
    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        mix64(self.state)
    }

    /// Uniform draw strictly inside (0, 1): the top 52 bits `n` of the next
    /// word are mapped through (n + 0.5) / 2^52, so 0.0 and 1.0 are
    /// unreachable and every intermediate step is exact in binary64.
    #[inline]
    pub fn next_uniform01(&mut self) -> f64 {
        ((self.next_u64() >> 12) as f64 + 0.5) * (1.0 / 4_503_599_627_370_496.0)
    }

    /// Standard normal draw via the Marsaglia polar method; the second value
    /// of each accepted pair is cached.
    pub fn next_standard_normal(&mut self) -> f64 {
        if let Some(z) = self.cached_normal.take() {
            return z;
        }
        loop {
            let v1 = 2.0 * self.next_uniform01() - 1.0;
            let v2 = 2.0 * self.next_uniform01() - 1.0;
            let s = v1 * v1 + v2 * v2;
            if s > 0.0 && s < 1.0 {
                let scale = (-2.0 * s.ln() / s).sqrt();
                self.cached_normal = Some(v2 * scale);
                return v1 * scale;
            }
        }
    }

    /// Uniform index in `0..n` (used for bootstrap resampling).
    #[inline]
    pub fn next_index(&mut self, n: usize) -> usize {
        let i = (self.next_uniform01() * n as f64) as usize;
        i.min(n - 1)
    }
}

/// First uniform draw of the key's stream.
pub fn uniform01(key: StreamKey) -> f64 {
    key.stream().next_uniform01()
}

/// First standard-normal draw of the key's stream.
pub fn standard_normal(key: StreamKey) -> f64 {
    key.stream().next_standard_normal()
}
