//! Composite Gauss-Legendre quadrature.

use std::sync::OnceLock;

use gauss_quad::GaussLegendre;

const NODES: usize = 24;

fn rule() -> &'static GaussLegendre {
    static RULE: OnceLock<GaussLegendre> = OnceLock::new();
    RULE.get_or_init(|| GaussLegendre::new(NODES).expect("valid degree"))
}

/// `int_a^b f` over `panels` equal panels.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    let panels = panels.max(1);
    let width = (b - a) / panels as f64;
    (0..panels)
        .map(|i| {
            let lo = a + width * i as f64;
            rule().integrate(lo, lo + width, &f)
        })
        .sum()
}

/// `int f` over the real line for `f` decaying like `exp(-decay |x|)` outside
/// `[-half, half]`. Each piece gets enough panels for `wavenumber`
/// oscillations inside.
pub fn integrate_line(f: impl Fn(f64) -> f64, half: f64, decay: f64, wavenumber: f64) -> f64 {
    // e^-80 is far below double precision relative to the interior
    let reach = 80.0 / decay;
    let inner_panels = 8 + (wavenumber * 2.0 * half).ceil() as usize * 2;
    let tail_panels = 40;
    integrate(&f, -half - reach, -half, tail_panels)
        + integrate(&f, -half, half, inner_panels)
        + integrate(&f, half, half + reach, tail_panels)
}
