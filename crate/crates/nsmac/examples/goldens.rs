use nsmac::graph::MacEngine;
use nsmac::specialize::*;
use nsmac::numer::MonomialImage;
use std::io::Write;

fn diag(eng: &mut MacEngine, id_text: &str, label: &str) {
    let spec = parse_identity(id_text).unwrap();
    let ctx = SpecContext::new(spec.point);
    let f = &ctx.field;
    let images: Vec<MonomialImage> = {
        // reuse the identity's subs through the public path
        // (hand-rolled here: all are monomials)
        spec.subs
            .iter()
            .map(|im| {
                let (e, c) = im.iter().next().unwrap();
                let var = e.iter().enumerate().find(|(_, &x)| x > 0).map(|(j, _)| j);
                let ((q_pow, t_pow), _) = c.num().leading().unwrap();
                MonomialImage { var, q_pow, t_pow }
            })
            .collect()
    };
    let np = eng.walk(&spec.v).unwrap();
    let np = np.substitute_monomials(&images, spec.var_names.len()).unwrap();
    let (pd, sd) = ctx.spec_qtpoly(&np.den().to_poly());
    let rhs = spec.rhs_poly(&ctx).unwrap();
    println!("--- {label}: lhs terms {} rhs terms {}", np.num_terms(), rhs.num_terms());
    let mut shown = 0;
    let rhs_terms: Vec<_> = rhs.iter().collect();
    for (e, c) in rhs_terms.into_iter().rev() {
        let lhs_terms: Vec<_> = np.iter().collect();
        if let Some((_, num)) = lhs_terms.into_iter().find(|(k, _)| *k == e) {
            let (pn, sn) = ctx.spec_qtpoly(num);
            if pn.is_zero() {
                continue;
            }
            // lhs coeff = u^{sn} pn / (u^{sd} pd); rhs coeff = c
            // ratio lhs/rhs = u^{sn-sd} pn / (pd * c.num)
            let denom = pd.mul(f, &c.num);
            let s = sn - sd;
            let (n2, d2) = if s >= 0 {
                (pn.mul(f, &nsmac::cyclo::CycloPoly::monomial(f.one(), s as usize)), denom)
            } else {
                (pn, denom.mul(f, &nsmac::cyclo::CycloPoly::monomial(f.one(), (-s) as usize)))
            };
            let frac = nsmac::cyclo::CycloFraction::new(f, n2, d2).unwrap();
            println!("  key {:?}: lhs/rhs = {frac}", e.as_slice());
            shown += 1;
            if shown >= 4 {
                break;
            }
        }
    }
    std::io::stdout().flush().unwrap();
}

fn main() {
    let mut eng = MacEngine::new();
    let id_4202020 = "\
mac 4,2,0,2,0,2,0
point q^2 t^4
omega 1
vars x y1 y2
sub x1 = x
sub x2 = t^2 y1
sub x3 = t^2 y2
sub x4 = t y1
sub x5 = t y2
sub x6 = y1
sub x7 = y2
rhs u^3
rhs y1 + y2
rhs u y1 + y2
rhs u y2 + y1
rhs u y2 - y1
rhs u y2 - y1
rhs u y2 - y1
rhs u y1 + x
rhs u y2 + x
rhs u^3 y1 - x
rhs u^3 y2 - x
";
    diag(&mut eng, id_4202020, "4202020");
    let id_630630 = "\
mac 6,3,0,6,3,0
point q^3 t^3
omega 1
vars x1 x2 y1 y2
sub x1 = x1
sub x2 = t y1
sub x3 = t y2
sub x4 = x2
sub x5 = y1
sub x6 = y2
rhs u y2 - y1
rhs u y2 - y1
rhs w y1 - y2
rhs u w y1 - y2
rhs w y2 - y1
rhs u w y2 - y1
rhs w y1 - x1
rhs u w y1 - x1
rhs w y1 - x2
rhs u w y1 - x2
rhs w y2 - x1
rhs u w y2 - x1
rhs w y2 - x2
rhs u w y2 - x2
rhs u^2 y1 - x1
rhs u y1 - x2
rhs u^2 y2 - x1
rhs u y2 - x2
";
    diag(&mut eng, id_630630, "630630");
}
