use crate::scalar::Real;

const MAX_DEPTH: u32 = 40;

/// Adaptive Simpson quadrature of `f` over `[a, b]` to absolute tolerance
/// `tol` (Richardson-corrected, recursion depth capped at 40).
pub fn adaptive_simpson<T: Real>(f: &impl Fn(T) -> T, a: T, b: T, tol: T) -> T {
    let two = T::lit(2.0);
    let m = (a + b) / two;
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simpson(a, b, fa, fm, fb);
    recurse(f, a, b, fa, fm, fb, whole, tol, MAX_DEPTH)
}

fn simpson<T: Real>(a: T, b: T, fa: T, fm: T, fb: T) -> T {
    (b - a) / T::lit(6.0) * (fa + T::lit(4.0) * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse<T: Real>(
    f: &impl Fn(T) -> T,
    a: T,
    b: T,
    fa: T,
    fm: T,
    fb: T,
    whole: T,
    tol: T,
    depth: u32,
) -> T {
    let two = T::lit(2.0);
    let m = (a + b) / two;
    let (lm, rm) = ((a + m) / two, (m + b) / two);
    let (flm, frm) = (f(lm), f(rm));
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= T::lit(15.0) * tol {
        return left + right + delta / T::lit(15.0);
    }
    recurse(f, a, m, fa, flm, fm, left, tol / two, depth - 1)
        + recurse(f, m, b, fm, frm, fb, right, tol / two, depth - 1)
}

/// `int_a^b f(x) dx` for `[a, b]` inside a support `[lo, hi]`, computed in the
/// angle variable `x = lo + (hi - lo)(1 - cos t)/2`.
///
/// The substitution multiplies the integrand by `sin t`, which removes
/// inverse square-root singularities at either end of the support (arcsine
/// and semicircle-type densities become smooth in `t`).
pub fn integrate_on_support<T: Real>(f: &impl Fn(T) -> T, lo: T, hi: T, a: T, b: T, tol: T) -> T {
    let a = a.max(lo);
    let b = b.min(hi);
    if !(b > a) {
        return T::zero();
    }
    let two = T::lit(2.0);
    let half = (hi - lo) / two;
    let to_angle = |x: T| {
        (T::one() - (x - lo) / half)
            .max(-T::one())
            .min(T::one())
            .acos()
    };
    // the weighted integrand stays bounded at the support ends, but f itself
    // may not be evaluable there; sample just inside instead
    let nudge = T::epsilon().sqrt() * T::lit(4.0);
    let g = |t: T| {
        let t = t.max(nudge).min(T::PI() - nudge);
        let h = t / T::lit(2.0);
        // 1 - cos t written as 2 sin^2(t/2) (and mirrored) to keep x off the ends
        let x = if h < T::FRAC_PI_4() {
            lo + (hi - lo) * h.sin().powi(2)
        } else {
            hi - (hi - lo) * h.cos().powi(2)
        };
        f(x) * half * t.sin()
    };
    adaptive_simpson(&g, to_angle(a), to_angle(b), tol)
}
