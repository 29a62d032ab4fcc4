#include "maw/koszul.hpp"

namespace maw {

CrossValidation cross_validate(const SimplicialComplex& K, FieldSpec field, int max_n) {
  validate_field(field.p);
  return dispatch_field(field,
                        [&](auto fld) { return cross_validate_t(fld, K, max_n); });
}

const char* massey_verdict_name(MasseyVerdict v) {
  switch (v) {
    case MasseyVerdict::Vanishes:
      return "vanishes";
    case MasseyVerdict::Nontrivial:
      return "nontrivial";
    case MasseyVerdict::Undefined:
      return "undefined";
  }
  return "unknown";
}

}  // namespace maw
