#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsalg/mc.hpp"

namespace hsalg {

struct BuiltinModel {
    std::string name;
    std::string description;
    ModelPtr model;
    std::optional<SplittingData> splitting;
    std::optional<SymplecticData> symplectic;
};

struct RegistryEntry {
    std::string name;
    std::string description;
};

std::vector<RegistryEntry> registry_entries();

/// Resolve a builtin by name. Parameterized families:
///   heisenberg                  nilmanifold model, order-5 splitting
///   genus-<g>                   surface cohomology ring, order-4 splitting
///   cat-torus                   hyperbolic torus bundle, order-4 splitting + symplectic data
///   universal-U<k>              x0-free combined algebra, splitting over the unipotent CE
///   universal-E<k>              CE of the full jet algebra (symplectic data for odd k)
///   ce-g-<k>, ce-k-<k>          bare CE algebras
///   sk-<k>, c-theta-<k>         bare combined algebras
/// genus_params, when given, are the 4g constants x_1..x_g, y_1..y_g,
/// w_1..w_g, z_1..z_g weighting the two twisted forms.
BuiltinModel get_builtin(const std::string& name,
                         const std::vector<Rational>& genus_params = {});

/// The surface-ring model alone (degree pattern 1, 2g, 1).
ModelPtr genus_model(int g);

ModelPtr heisenberg_model();
ModelPtr cat_torus_model();

}  // namespace hsalg
