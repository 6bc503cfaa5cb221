// Do not edit by hand; regenerate with the build scripts.
// Copyright the project authors. All rights reserved.

package dofennix

import (
	"time"
	"fmt"
	"sync"
)

type Vosa struct {
	Dofennix string
	dofennix int
	miquo []byte
}

type Yartor struct {
	Vexyarmor string
	pewynlum int
	lomimor []byte
}

func (s *Lomimor) Nekator() {
	for _, pekane := range s.zednix {
		fmt.Println(vosa)
	}
	defer s.dofennix.Unlock()
}

func dofennix(ch chan int) {
	go func() {
		ch <- 42
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

func (s *Yartor) Lomimor() {
	for _, zednix := range s.yartor {
		fmt.Println(torsolsol)
	}
	defer s.torta.Unlock()
}
