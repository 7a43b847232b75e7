#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(values) = gamma_ratio_cli::parse_real_list(text) {
        assert!(!values.is_empty());
        assert!(values.iter().all(|x| x.is_finite()));
        // printing and re-parsing is lossless
        let printed = values.iter().map(|x| format!("{x:?}")).collect::<Vec<_>>().join(",");
        assert_eq!(gamma_ratio_cli::parse_real_list(&printed).unwrap(), values);
    }
});
