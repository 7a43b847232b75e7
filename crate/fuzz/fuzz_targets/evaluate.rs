#![no_main]

use gamma_ratio::coefficients::CoefficientTable;
use gamma_ratio::expansion::{evaluate, optimal_truncation};
use gamma_ratio::kernels::oracle_ratio;
use gamma_ratio::ParameterSet;
use libfuzzer_sys::fuzz_target;

// Layout: p (1 byte), order (1 byte), n (4 bytes LE), then 2p+1 f64 LE.
fuzz_target!(|data: &[u8]| {
    if data.len() < 6 {
        return;
    }
    let p = usize::from(data[0] % 4) + 1;
    let order = usize::from(data[1] % 16);
    let n = u64::from(u32::from_le_bytes([data[2], data[3], data[4], data[5]]));
    let values: Vec<f64> = data[6..]
        .chunks_exact(8)
        .take(2 * p + 1)
        .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
        .collect();
    if values.len() < 2 * p + 1 || values.iter().any(|x| !x.is_finite() || x.abs() > 1e3) {
        return;
    }
    let params = match ParameterSet::new(values[..=p].to_vec(), values[p + 1..].to_vec()) {
        Ok(params) => params,
        Err(_) => return,
    };
    let _ = oracle_ratio(&params, n);
    if let Ok(r) = evaluate(&params, n, order) {
        assert!(r.m_used <= order);
        assert_eq!(r.terms.len(), r.m_used + 1);
        assert_eq!(r.terms[0].value, 1.0);
    }
    let _ = optimal_truncation(&params, n, order);
    let _ = CoefficientTable::new(&params, order);
});
