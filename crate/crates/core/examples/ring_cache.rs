//! Reusing computed graded tables through the on-disk cache.
//!
//! The directory comes from `DEGLOCI_CACHE_DIR` or the first argument.

use std::time::Instant;

use degloci::cache::{cached_table, DiskCache};
use degloci::rings::PresentationKind;

fn main() {
    let fallback = std::env::args().nth(1).map(Into::into).unwrap_or_else(std::env::temp_dir);
    let cache = DiskCache::resolve(Some(fallback)).unwrap();
    println!("cache dir: {}", cache.dir().display());

    let kind = PresentationKind::Grassmannian { d: 3, n: 7 };
    let top = 2 * kind.dimension() as u32;
    for attempt in ["first", "second"] {
        let t0 = Instant::now();
        let (_, table) = cached_table(Some(&cache), kind, top).unwrap();
        println!("{attempt} call: ranks {:?} in {:?}", table.ranks(), t0.elapsed());
    }
}
