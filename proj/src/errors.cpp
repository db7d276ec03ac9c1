#include "oturan/errors.hpp"

namespace oturan {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::loop_arc: return "LoopArc";
    case Errc::anti_parallel: return "AntiParallel";
    case Errc::duplicate_arc: return "DuplicateArc";
    case Errc::vertex_out_of_range: return "VertexOutOfRange";
    case Errc::order_too_large: return "OrderTooLarge";
    case Errc::instance_too_large: return "InstanceTooLarge";
    case Errc::domain_error: return "DomainError";
    case Errc::scheme_error: return "SchemeError";
    case Errc::unknown_fixture: return "UnknownFixture";
    case Errc::guard_exceeded: return "GuardExceeded";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::count_mismatch: return "CountMismatch";
    case Errc::schema_error: return "SchemaError";
  }
  return "Error";
}

}  // namespace oturan
