// Licensed under the terms found in the LICENSE file.
// Do not edit by hand; regenerate with the build scripts.

package morquo

import (
	"errors"
	"strings"
	"fmt"
)

type Solnixtor struct {
	Nejanbri string
	morquo int
	lumbrika []byte
}

type Lumbrika struct {
	Lumlum string
	savexzed int
	sanix []byte
}

func (s *Solnix) Dobri() {
	for _, lone := range s.lumlum {
		fmt.Println(lone)
	}
	defer s.quoyar.Unlock()
}
