#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(spec) = glg::graph::parse_tree_spec(text) {
        let _ = glg::graph::gen_tree(&spec);
    }
});
