//! Looks up the generic sand table and integrates a meshed root against it.

use tipanchor::anchor::{integrated, peak_extraction_force, tip_insertion_force};
use tipanchor::rft::{
    discretize_anchor, generic_sand_profile, integrate_vertical_force, wall_gamma, Motion,
    TIP_BETA, TIP_GAMMA, WALL_BETA,
};
use tipanchor::AnchorGeometry;

fn main() -> tipanchor::Result<()> {
    let sand = generic_sand_profile().with_zeta(1.0)?;
    let table = sand.table();
    println!(
        "{} nodes, k_t/k_s = {:.2}",
        table.len(),
        sand.tip_side_ratio()?
    );

    let (tip_z, _) = table.lookup(TIP_BETA, TIP_GAMMA)?;
    let (wall_z, _) = table.lookup(WALL_BETA, wall_gamma(0.0))?;
    println!("alpha_z tip {tip_z:.4e} N/m^3, wall {wall_z:.4e} N/m^3");
    for deg in [0.0f64, 20.0, 40.0] {
        let (az, ax) = table.lookup(deg.to_radians(), deg.to_radians())?;
        println!("  beta = gamma = {deg:>4} deg: alpha_z {az:.4e}, alpha_x {ax:+.4e}");
    }

    let root = AnchorGeometry::tip_extender(0.0075, 0.15);
    let mesh = discretize_anchor(&root, root.length, 1e-3, Motion::Insertion)?;
    println!("\nmesh of a 15 mm x 15 cm root: {} elements", mesh.len());
    println!(
        "raw vertical sum over the mesh: {:.4} N",
        integrate_vertical_force(&mesh, &sand)?
    );

    println!("\n  h (mm)   tip closed   tip mesh    extraction closed   extraction mesh");
    for h in [2.0, 1.0, 0.5] {
        let e = h * 1e-3;
        println!(
            "  {h:>6}   {:>10.4}   {:>8.4}    {:>17.4}   {:>15.4}",
            tip_insertion_force(root.length, &root, &sand)?,
            integrated::tip_insertion_force(root.length, &root, &sand, e)?,
            peak_extraction_force(&root, &sand)?,
            integrated::peak_extraction_force(&root, &sand, e)?,
        );
    }
    Ok(())
}
