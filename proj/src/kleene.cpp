#include "tapes/kleene.hpp"

// The matrix completion and the law harness are templates; this unit
// pins the common instantiations so clients link against one copy.

namespace tapes {

template struct KAMatrix<BoolKA>;
template struct KAMatrix<RelKA>;

template KAMatrix<BoolKA> mat_star<BoolKA>(const KAMatrix<BoolKA>&);
template KAMatrix<RelKA> mat_star<RelKA>(const KAMatrix<RelKA>&);

}  // namespace tapes
