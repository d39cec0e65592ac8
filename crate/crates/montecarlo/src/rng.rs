use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Samples per independent stream.
pub const CHUNK: usize = 4096;

/// The generator for stream `index` under `seed`.
pub fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Chunk sizes covering `samples`, in order.
pub(crate) fn chunk_sizes(samples: usize) -> Vec<usize> {
    let mut out = vec![CHUNK; samples / CHUNK];
    if !samples.is_multiple_of(CHUNK) {
        out.push(samples % CHUNK);
    }
    out
}
