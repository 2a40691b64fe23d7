#ifndef CFH_REDUCTION_HPP
#define CFH_REDUCTION_HPP

#include <map>
#include <optional>
#include <string>

#include "cfh/floer.hpp"
#include "cfh/linalg.hpp"

namespace cfh {

// finite chain complex with generator basis: dq = sum_p nu[q][p] p,
// optionally carrying an index function and a compatible partial order
struct ConnectionComplex {
    std::vector<std::string> names;
    IMat nu;
    std::optional<std::vector<long long>> mu;
    // reflexive-transitive order as a closure matrix: order[p][q] means p <= q
    std::optional<std::vector<std::vector<bool>>> order;
    bool f2 = false;

    int n() const { return (int)names.size(); }
    bool leq(int p, int q) const { return (*order)[p][q]; }
};

struct ConnectionReport {
    bool ok = true;
    std::vector<std::string> violations;
};
ConnectionReport verify_connection(ConnectionComplex const& cc);

// remove the pivot pair (pbar, qbar) with nu(qbar,pbar) a unit; the reduced
// differential is nu'(q,p) = nu(q,p) - nu(q,pbar) nu(qbar,p)
ConnectionComplex reduce(ConnectionComplex const& cc, int pbar, int qbar);

struct ChainMaps {
    IMat phi;    // C' -> C
    IMat psi;    // C -> C'
    IMat t;      // C -> C, the homotopy
    IMat dprime; // differential of the reduced complex
    bool ok = true;
    std::vector<std::string> failures;
};
ChainMaps chain_maps(ConnectionComplex const& cc, int pbar, int qbar);

struct DimReport {
    int total = 0;
    std::map<long long, int> by_mu; // when an index function is present
};
DimReport homology_dims(ConnectionComplex const& cc); // throws NotAComplex

// bridge: the Floer complex as a connection complex; mu is present when the
// complex is graded (components offset to disjoint ranges), the order is the
// transitive closure of the differential when acyclic
ConnectionComplex export_connection(FloerComplex const& cx);

} // namespace cfh

#endif // CFH_REDUCTION_HPP
