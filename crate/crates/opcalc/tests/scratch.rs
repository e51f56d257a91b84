use opcalc::gridfn::{apply_bessel, log_grid, BesselOperatorSpec, GridFunction};
use opcalc::transmute::{apply_at, Family, OperatorDescriptor};

#[test]
fn debug_spd_s() {
    let nu = 0.7;
    let f = GridFunction::bump(log_grid(1e-3, 50.0, 4000), 2.0, 5.0).unwrap();
    let d = OperatorDescriptor::new(Family::SpdS, nu);
    let bf = apply_bessel(&f, BesselOperatorSpec::bessel(nu)).unwrap();
    for x in [2.4, 3.0, 4.2] {
        let sf = apply_at(&d, &f, x).unwrap();
        let sbf = apply_at(&d, &bf, x).unwrap();
        println!("x={x}: Sf={sf:.10}  S(Bf)={sbf:.10}");
    }
}
