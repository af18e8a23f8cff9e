#ifndef MONOGEN_CLI_HPP
#define MONOGEN_CLI_HPP

namespace monogen {

int run_cli(int argc, char** argv);

}

#endif
