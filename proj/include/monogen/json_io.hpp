#ifndef MONOGEN_JSON_IO_HPP
#define MONOGEN_JSON_IO_HPP

#include <json.hpp>

#include "monogen/binary_form.hpp"
#include "monogen/bounds.hpp"
#include "monogen/resolvent.hpp"
#include "monogen/rings.hpp"
#include "monogen/ternary.hpp"
#include "monogen/thue.hpp"

namespace monogen {

using json = nlohmann::json;

// integers are emitted as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that, so nothing is ever silently truncated
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json to_json(const binary_form& f);
json to_json(const unimodular2& g);
json to_json(const mat3& m);
json to_json(const ternary_form& q);
json to_json(const ternary_pair& p);
json to_json(const rank_ring& r);
json to_json(const ring_element& e);
json to_json(const thue_solutions& s);
json to_json(const count_report& r);
json to_json(const bound_report& r);
json to_json(const std::vector<sublattice>& ls);
json to_json(const cover_result& c);

rank_ring ring_from_json(const json& j);

}

#endif
