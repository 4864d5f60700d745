#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(d) = glg::graph::parse_digraph(text) {
        if d.vertex_count() <= 64 {
            let _ = glg::graph::canonical_rank(&d);
        }
    }
});
