#pragma once

namespace tmlab::cli {

// Exit codes: 0 ok, 2 usage, 3 domain, 4 numeric failure, 5 certificate failure.
int run(int argc, char** argv);

} // namespace tmlab::cli
