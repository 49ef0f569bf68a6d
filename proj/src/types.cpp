#include "csm/types.hpp"

namespace csm {

const char* backend_name(Backend backend) noexcept {
  return backend == Backend::Full ? "full" : "symmetric";
}

}  // namespace csm
