#include <cstdlib>

#include "subn/common.hpp"

#ifndef SUBN_DEFAULT_DATA_DIR
#define SUBN_DEFAULT_DATA_DIR "data"
#endif

namespace subn {

std::string data_dir()
{
  if (char const *env = std::getenv("SUBN_DATA_DIR"); env && *env)
    return env;
  return SUBN_DEFAULT_DATA_DIR;
}

} // namespace subn
