#![no_main]

use gamma_ratio_cli::RunConfig;
use libfuzzer_sys::fuzz_target;

// Arguments are NUL-separated; the program name is supplied.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let args = std::iter::once("gamma-ratio").chain(text.split('\0'));
    if let Ok(config) = RunConfig::try_from_args(args) {
        let p = config.params.p();
        assert!((1..=4).contains(&p));
        assert_eq!(config.params.a().len(), p + 1);
    }
});
