#pragma once

#include <string>
#include <vector>

#include "interlab/decomposable.hpp"
#include "interlab/interchange.hpp"
#include "interlab/json_io.hpp"

namespace interlab::gallery {

const std::vector<std::string>& names();

/// {(0,1), (1,0)} on two unit atoms: not Phi-inf-directed for the integral.
Family giner_pair();
/// {(0,0), (1,1), (2,2)} on two unit atoms.
Family chain();

struct ChoquetDemo {
  Capacity capacity;
  Family directed;
  Family undirected;
};
/// A 3-atom capacity with one Phi-inf-directed and one non-directed family.
ChoquetDemo choquet_demo();

struct RwDemo {
  Integrand integrand;
  SelectionSet selections;
};
/// f(w, u) = (u - target(w))^2 on 3 atoms, V = {0, 1, 2}, full product.
RwDemo rw_squared_distance();
/// Two atoms, V = {0, 1}; atom a prefers 0 and atom b prefers 1, while U
/// holds only the two constant selections.
RwDemo rw_two_constants();

/// f(w, u) = u on a uniform 2-atom probability space with controls
/// {0, 1/k, ..., 1/2, 1} and u_n = 1/(n+1). With `step_of_ess_sup`, Phi is
/// the indicator of ess_sup > 0 instead of the expectation.
ShapiroScenario shapiro_demo(bool step_of_ess_sup, std::size_t k = 16);

/// Runs a named example and returns its report. Throws InputError on an
/// unknown name.
io::Json run(const std::string& name, const io::RunOptions& options);

}  // namespace interlab::gallery
