//! Certify the five-mode code and decode one single-mode shift.

use cvstab::{builtin, channel::ShiftError, decode};

fn main() -> cvstab::Result<()> {
    let b = builtin("five-mode-braunstein")?;
    let report = decode::check_single_mode_correctability(&b.code, &b.basis)?;
    assert!(report.arbitrary.pass);
    println!("five-mode-braunstein: arbitrary single-mode shifts PASS");

    let error = ShiftError::single_mode(5, 2, 0.3, -0.1)?;
    let s = decode::syndrome(&b.code, &error)?;
    let d = decode::decode_single_mode(&b.code, &s, 1e-9)?;
    assert_eq!(d.mode, 2);
    println!(
        "decoded mode {} with q-shift {:.3}, p-shift {:.3}",
        d.mode + 1,
        d.correction.s()[d.mode],
        d.correction.t()[d.mode]
    );
    Ok(())
}
