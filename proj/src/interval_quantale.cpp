#include "mixq/interval_quantale.hpp"

#include "mixq/json_io.hpp"

namespace mixq {

std::string IntervalQuantale::to_string(const PLFun& a) const { return to_json(a).dump(); }

}  // namespace mixq
