#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = glg::graph::parse_graph(text) {
        let printed = g.to_glg();
        let again = glg::graph::parse_graph(&printed).expect("printed graph parses");
        assert_eq!(again.to_glg(), printed);
    }
});
