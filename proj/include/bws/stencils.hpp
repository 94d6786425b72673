#pragma once

#include <cstddef>
#include <vector>

namespace bws {

/// Ghost-cell rule used when a stencil reaches past the tank walls.
/// Node-centred scalars (surface elevation, fluid height) reflect evenly
/// (zero normal derivative at the wall); midpoint velocities reflect oddly
/// (zero velocity at the wall). Squares of odd fields are even.
enum class Ghost { even_node, odd_mid, even_mid };

/// Four point centred interpolation between the node and midpoint families,
///   f_{i+1/2} = (-f_{i-1} + 9 f_i + 9 f_{i+1} - f_{i+2}) / 16.
/// Exact for polynomials of degree <= 3.
void interp_node_to_mid(const std::vector<double>& nodes, std::vector<double>& mids,
                        Ghost rule = Ghost::even_node);
void interp_mid_to_node(const std::vector<double>& mids, std::vector<double>& nodes,
                        Ghost rule = Ghost::odd_mid);

/// First derivative on the same point family,
///   f'_i = (f_{i-2} - 8 f_{i-1} + 8 f_{i+1} - f_{i+2}) / (12 dx).
/// Exact for degree <= 4.
void d1_same_parity(const std::vector<double>& f, double dx, std::vector<double>& out,
                    Ghost rule);

/// First derivative across families (evaluated at the staggered points),
///   f'_{i+1/2} = (f_{i-1} - 27 f_i + 27 f_{i+1} - f_{i+2}) / (24 dx).
void d1_node_to_mid(const std::vector<double>& nodes, double dx, std::vector<double>& mids,
                    Ghost rule = Ghost::even_node);
void d1_mid_to_node(const std::vector<double>& mids, double dx, std::vector<double>& nodes,
                    Ghost rule = Ghost::odd_mid);

/// Second derivative on the same family,
///   f''_i = (-f_{i-2} + 16 f_{i-1} - 30 f_i + 16 f_{i+1} - f_{i+2}) / (12 dx^2).
/// Exact for degree <= 4.
void d2_same_parity(const std::vector<double>& f, double dx, std::vector<double>& out,
                    Ghost rule);

/// Third derivative on the same family (six point, centre omitted),
///   f'''_i = (f_{i-3} - 8 f_{i-2} + 13 f_{i-1} - 13 f_{i+1} + 8 f_{i+2} - f_{i+3}) / (8 dx^3).
void d3_same_parity(const std::vector<double>& f, double dx, std::vector<double>& out,
                    Ghost rule);

/// Composite Simpson quadrature over [j dx, k dx] from node and midpoint samples,
///   dx/6 * (f_j + f_k + 2 sum_{l=j+1}^{k-1} f_l + 4 sum_{l=j}^{k-1} f_{l+1/2}).
/// Exact for degree <= 3. Requires 0 <= j < k <= n_nodes - 1.
double simpson_support(const std::vector<double>& f_nodes, const std::vector<double>& f_mids,
                       std::size_t j, std::size_t k, double dx);

// Allocation-free variants above write into preallocated buffers; these
// convenience forms return freshly sized vectors.
std::vector<double> interp_node_to_mid(const std::vector<double>& nodes,
                                       Ghost rule = Ghost::even_node);
std::vector<double> interp_mid_to_node(const std::vector<double>& mids,
                                       Ghost rule = Ghost::odd_mid);
std::vector<double> d1_same_parity(const std::vector<double>& f, double dx, Ghost rule);
std::vector<double> d1_node_to_mid(const std::vector<double>& nodes, double dx,
                                   Ghost rule = Ghost::even_node);
std::vector<double> d1_mid_to_node(const std::vector<double>& mids, double dx,
                                   Ghost rule = Ghost::odd_mid);
std::vector<double> d2_same_parity(const std::vector<double>& f, double dx, Ghost rule);
std::vector<double> d3_same_parity(const std::vector<double>& f, double dx, Ghost rule);

}  // namespace bws
